#include "vohedge/smile_sabr.hpp"

#include <cmath>

#include "vohedge/errors.hpp"

namespace vohedge::sabr {

namespace {

void check_rho(double rho) {
  if (!(std::abs(rho) < 1.0)) throw DomainError("sabr: |rho| must be < 1");
}

double radical(double y, double rho) { return std::sqrt(1.0 + rho * y + 0.25 * y * y); }

}  // namespace

void SabrSmileParams::validate() const {
  if (!(std::abs(rho) <= kRhoGuard)) throw DomainError("sabr: |rho| must be <= 0.9999");
  if (!(eta > 0.0)) throw DomainError("sabr: eta must be positive");
}

double g(double y, double rho) {
  check_rho(rho);
  // log argument written as 1 + x so that log1p keeps accuracy near y = 0.
  const double r = radical(y, rho);
  const double shifted = (rho * y + 0.25 * y * y) / (r + 1.0) - 0.5 * y;
  return -2.0 * std::log1p(shifted / (1.0 - rho));
}

smile::SmileDerivs smile_series(double y, double rho) {
  check_rho(rho);
  const smile::Coeffs g_over_y = smile::sabr_g_over_y(rho);
  return smile::SmileSeries(smile::multiply(g_over_y, g_over_y)).eval(y);
}

double f(double y, double rho) {
  if (std::abs(y) < kSeriesThreshold) return smile_series(y, rho).f;
  return y / g(y, rho);
}

smile::SmileDerivs smile_functions(double y, double rho) {
  if (std::abs(y) < kSeriesThreshold) return smile_series(y, rho);
  const double fy = y / g(y, rho);
  const double F1 = fy * fy / radical(y, rho);
  return {fy, F1, 2.0 / y * (F1 - fy)};
}

SmileState sigma_hat(double t, double spot, double alpha, const OptionSpec& opt,
                     const SabrSmileParams& p) {
  if (!(t < opt.maturity)) throw DomainError("sabr::sigma_hat: requires t < T");
  if (!(spot > 0.0) || !(alpha > 0.0))
    throw DomainError("sabr::sigma_hat: spot and alpha must be positive");
  const double y = p.eta / alpha * std::log(opt.strike / spot);
  const smile::SmileDerivs d = smile_functions(y, p.rho);
  return {y, alpha * d.f, d.f, d.F1, d.F2};
}

}  // namespace vohedge::sabr
