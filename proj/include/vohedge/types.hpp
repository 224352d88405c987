#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vohedge {

enum class ModelKind { Sabr, RoughBergomi };

std::string_view to_string(ModelKind kind);

/// European call on a non-dividend asset; rates are zero.
struct OptionSpec {
  double strike = 1.0;
  double maturity = 1.0;
  double spot = 1.0;
};

/// Forward-variance curve s -> xi_t(s), linear between nodes.
struct ForwardCurve {
  std::vector<double> times;
  std::vector<double> values;

  static ForwardCurve flat(double variance, double t0, double t1);
  /// Linear interpolation; clamps outside [times.front(), times.back()].
  double at(double s) const;
  void validate() const;
};

struct ModelParams {
  ModelKind kind = ModelKind::Sabr;
  double eta = 0.5;
  double alpha0 = 0.4;
  double rho = 0.0;
  double hurst = 0.5;
  double spot0 = 1.0;
  // Rough Bergomi only. Flat alpha0^2 when absent.
  std::optional<ForwardCurve> initial_curve;

  void validate() const;
};

inline constexpr double kRhoGuard = 0.9999;

}  // namespace vohedge
