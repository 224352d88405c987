#pragma once

#include <span>
#include <vector>

#include "vohedge/rng.hpp"
#include "vohedge/types.hpp"

namespace vohedge::sim {

struct GridSpec {
  int n_steps = 1000;
  double horizon = 1.0;

  double dt() const { return horizon / n_steps; }
  double time(int i) const { return horizon * i / n_steps; }
  void validate() const;
};

struct SabrPath {
  std::vector<double> times;
  std::vector<double> spot;
  std::vector<double> alpha;
};

struct RoughPath {
  std::vector<double> times;
  std::vector<double> spot;
  std::vector<double> alpha;
  // U_i = sqrt(mean of xi_{t_i}(s) over [t_i, T]) by trapezoid; last entry alpha_n.
  std::vector<double> level;
  // xi_{t_i}(T) for every node.
  std::vector<double> xi_maturity;
  // Optional full surface: xi[i][j - i] = xi_{t_i}(t_j), j >= i.
  std::vector<std::vector<double>> xi;
};

/// Read-only view consumed by the hedging engine. `level` is the implied-vol
/// level: alpha for SABR, U_t for rough Bergomi.
struct PathView {
  std::span<const double> times;
  std::span<const double> spot;
  std::span<const double> alpha;
  std::span<const double> level;
};

PathView view(const SabrPath& path);
PathView view(const RoughPath& path);

/// Exact exponential step for alpha, log-Euler for the spot.
SabrPath simulate_sabr(const ModelParams& params, const GridSpec& grid, const RngStream& rng);
SabrPath simulate_sabr(const ModelParams& params, const GridSpec& grid,
                       std::span<const NormalPair> normals);

/// Lognormal update of every remaining forward-variance slice with the
/// left-point kernel kappa(t_j - t_i), then alpha = sqrt(xi(t, t)).
RoughPath simulate_rough(const ModelParams& params, const GridSpec& grid, const RngStream& rng,
                         bool keep_surface = false);
RoughPath simulate_rough(const ModelParams& params, const GridSpec& grid,
                         std::span<const NormalPair> normals, bool keep_surface = false);

}  // namespace vohedge::sim
