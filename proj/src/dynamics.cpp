#include "vohedge/dynamics.hpp"

#include <cmath>
#include <string>

#include "vohedge/errors.hpp"
#include "vohedge/smile_rough.hpp"

namespace vohedge::sim {

namespace {

void check_finite(double spot, double alpha, int step) {
  if (!std::isfinite(spot) || !std::isfinite(alpha) || !(spot > 0.0) || !(alpha > 0.0))
    throw NumericError("non-finite path state at step " + std::to_string(step));
}

std::vector<double> grid_times(const GridSpec& grid) {
  std::vector<double> t(grid.n_steps + 1);
  for (int i = 0; i <= grid.n_steps; ++i) t[i] = grid.time(i);
  return t;
}

void check_normals(const GridSpec& grid, std::span<const NormalPair> normals) {
  if (normals.size() != static_cast<std::size_t>(grid.n_steps))
    throw DomainError("normals size must equal n_steps");
}

}  // namespace

void GridSpec::validate() const {
  if (n_steps < 2) throw DomainError("grid: n_steps must be >= 2");
  if (!(horizon > 0.0)) throw DomainError("grid: horizon must be positive");
}

PathView view(const SabrPath& path) { return {path.times, path.spot, path.alpha, path.alpha}; }
PathView view(const RoughPath& path) { return {path.times, path.spot, path.alpha, path.level}; }

SabrPath simulate_sabr(const ModelParams& params, const GridSpec& grid, const RngStream& rng) {
  grid.validate();
  return simulate_sabr(params, grid, correlated_normals(rng, grid.n_steps, params.rho));
}

SabrPath simulate_sabr(const ModelParams& params, const GridSpec& grid,
                       std::span<const NormalPair> normals) {
  grid.validate();
  check_normals(grid, normals);
  if (!(params.eta >= 0.0) || !(params.alpha0 > 0.0))
    throw DomainError("simulate_sabr: eta >= 0 and alpha0 > 0 required");
  if (!(std::abs(params.rho) <= kRhoGuard)) throw DomainError("simulate_sabr: |rho| > 0.9999");

  const int n = grid.n_steps;
  const double dt = grid.dt();
  const double sqrt_dt = std::sqrt(dt);
  const double vol_drift = params.eta * params.eta * dt / 8.0;

  SabrPath path{grid_times(grid), std::vector<double>(n + 1), std::vector<double>(n + 1)};
  double spot = params.spot0;
  double alpha = params.alpha0;
  path.spot[0] = spot;
  path.alpha[0] = alpha;
  for (int i = 0; i < n; ++i) {
    const double dw = sqrt_dt * normals[i].dw;
    const double db = sqrt_dt * normals[i].db;
    spot *= std::exp(alpha * db - 0.5 * alpha * alpha * dt);
    alpha *= std::exp(0.5 * params.eta * dw - vol_drift);
    check_finite(spot, alpha, i + 1);
    path.spot[i + 1] = spot;
    path.alpha[i + 1] = alpha;
  }
  return path;
}

RoughPath simulate_rough(const ModelParams& params, const GridSpec& grid, const RngStream& rng,
                         bool keep_surface) {
  grid.validate();
  return simulate_rough(params, grid, correlated_normals(rng, grid.n_steps, params.rho),
                        keep_surface);
}

RoughPath simulate_rough(const ModelParams& params, const GridSpec& grid,
                         std::span<const NormalPair> normals, bool keep_surface) {
  grid.validate();
  check_normals(grid, normals);
  if (!(params.hurst > 0.0 && params.hurst <= 0.5))
    throw DomainError("simulate_rough: hurst must lie in (0, 1/2]");
  if (!(params.eta > 0.0) || !(params.alpha0 > 0.0))
    throw DomainError("simulate_rough: eta and alpha0 must be positive");
  if (!(std::abs(params.rho) <= kRhoGuard)) throw DomainError("simulate_rough: |rho| > 0.9999");

  const int n = grid.n_steps;
  const double dt = grid.dt();
  const double sqrt_dt = std::sqrt(dt);
  const rough::RoughSmileParams kp{params.rho, params.eta, params.hurst};

  // kappa and its Ito correction by lag k = j - i (k >= 1).
  std::vector<double> kappa(n + 1, 0.0);
  std::vector<double> half_var(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    kappa[k] = rough::kernel(k * dt, kp);
    half_var[k] = 0.5 * kappa[k] * kappa[k] * dt;
  }

  RoughPath path;
  path.times = grid_times(grid);
  std::vector<double> xi(n + 1);
  if (params.initial_curve) {
    params.initial_curve->validate();
    for (int j = 0; j <= n; ++j) xi[j] = params.initial_curve->at(path.times[j]);
  } else {
    for (int j = 0; j <= n; ++j) xi[j] = params.alpha0 * params.alpha0;
  }

  path.spot.resize(n + 1);
  path.alpha.resize(n + 1);
  path.level.resize(n + 1);
  path.xi_maturity.resize(n + 1);
  if (keep_surface) path.xi.resize(n + 1);

  double spot = params.spot0;
  for (int i = 0;; ++i) {
    const double alpha = std::sqrt(xi[i]);
    path.spot[i] = spot;
    path.alpha[i] = alpha;
    path.xi_maturity[i] = xi[n];
    if (keep_surface) path.xi[i].assign(xi.begin() + i, xi.end());
    if (i == n) {
      path.level[i] = alpha;
      break;
    }
    double trapezoid = 0.5 * (xi[i] + xi[n]);
    for (int j = i + 1; j < n; ++j) trapezoid += xi[j];
    path.level[i] = std::sqrt(trapezoid / (n - i));

    const double dw = sqrt_dt * normals[i].dw;
    const double db = sqrt_dt * normals[i].db;
    spot *= std::exp(alpha * db - 0.5 * alpha * alpha * dt);
    for (int j = i + 1; j <= n; ++j) xi[j] *= std::exp(kappa[j - i] * dw - half_var[j - i]);
    check_finite(spot, xi[i + 1], i + 1);
  }
  return path;
}

}  // namespace vohedge::sim
