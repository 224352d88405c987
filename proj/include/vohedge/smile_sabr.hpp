#pragma once

#include "vohedge/smile_series.hpp"
#include "vohedge/types.hpp"

// Lognormal SABR implied volatility Sigma_hat = alpha f(Y) with
// Y = (eta / alpha) log(K / S) and Hagan's f(y) = y / g(y).

namespace vohedge::sabr {

struct SabrSmileParams {
  double rho;
  double eta;

  void validate() const;
};

struct SmileState {
  double y;
  double sigma_hat;
  double f;
  double F1;
  double F2;
};

/// Below this |y| the series branch replaces the closed forms.
inline constexpr double kSeriesThreshold = 1e-4;

double g(double y, double rho);
double f(double y, double rho);
/// f, F1 = f^2 / sqrt(1 + rho y + y^2/4), F2 = (2/y)(F1 - f).
smile::SmileDerivs smile_functions(double y, double rho);
/// Series branch only; exposed for switchover tests.
smile::SmileDerivs smile_series(double y, double rho);

SmileState sigma_hat(double t, double spot, double alpha, const OptionSpec& opt,
                     const SabrSmileParams& p);

}  // namespace vohedge::sabr
