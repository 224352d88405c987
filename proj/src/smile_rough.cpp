#include "vohedge/smile_rough.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vohedge/errors.hpp"
#include "vohedge/smile_sabr.hpp"

namespace vohedge::rough {

namespace {

void check_rho(double rho) {
  if (!(std::abs(rho) < 1.0)) throw DomainError("rough: |rho| must be < 1");
}

struct Interp {
  double scale;  // 2H + 1
  double c0;
  double c12;
};

Interp interpolation(double hurst) {
  const double scale = 2.0 * hurst + 1.0;
  return {scale, 3.0 * (1.0 - 2.0 * hurst) / (2.0 * hurst + 3.0), 2.0 * hurst / (2.0 * hurst + 3.0)};
}

smile::Coeffs normalized_gh_series(const RoughSmileParams& p) {
  const Interp w = interpolation(p.hurst);
  const smile::Coeffs q0 = smile::g0_over_y2(p.rho);
  const smile::Coeffs g12 = smile::sabr_g_over_y(p.rho);
  const smile::Coeffs q12 = smile::multiply(g12, g12);
  // G_H(y)/y^2 = c0 Q0(y/a) + 4 c12 Q12(2y/a).
  smile::Coeffs q{};
  double inv = 1.0;
  double two_inv = 1.0;
  for (int k = 0; k < smile::kSeriesTerms; ++k) {
    q[k] = w.c0 * q0[k] * inv + 4.0 * w.c12 * q12[k] * two_inv;
    inv /= w.scale;
    two_inv *= 2.0 / w.scale;
  }
  return q;
}

}  // namespace

void RoughSmileParams::validate() const {
  if (!(std::abs(rho) <= kRhoGuard)) throw DomainError("rough: |rho| must be <= 0.9999");
  if (!(eta > 0.0)) throw DomainError("rough: eta must be positive");
  if (!(hurst >= 0.0 && hurst <= 0.5)) throw DomainError("rough: hurst must lie in [0, 1/2]");
}

double kernel(double r, const RoughSmileParams& p) {
  if (p.hurst == 0.0) return 0.0;
  if (p.hurst == 0.5) return p.eta;
  if (!(r > 0.0)) throw DomainError("rough::kernel: r must be positive for H < 1/2");
  return p.eta * std::sqrt(2.0 * p.hurst) * std::pow(r, p.hurst - 0.5);
}

double slope_coefficient(double hurst) { return 1.0 / ((hurst + 0.5) * (hurst + 1.5)); }

GPair G_pair(double y, double rho) {
  check_rho(rho);
  const double s = std::sqrt(1.0 - rho * rho);
  // arctan(rho/s) - arctan((y+rho)/s) == atan2(-y s, 1 + rho y) without branch issues.
  const double g0 = std::log1p(2.0 * rho * y + y * y) + 2.0 * rho / s * std::atan2(-y * s, 1.0 + rho * y);
  const double g = sabr::g(y, rho);
  return {g0, g * g};
}

GPair dG_pair(double y, double rho) {
  check_rho(rho);
  const double dg0 = 2.0 * y / (1.0 + 2.0 * rho * y + y * y);
  const double dg12 = 2.0 * sabr::g(y, rho) / std::sqrt(1.0 + rho * y + 0.25 * y * y);
  return {dg0, dg12};
}

double GH(double y, const RoughSmileParams& p) {
  const Interp w = interpolation(p.hurst);
  const double lhs = w.c0 == 0.0 ? 0.0 : w.c0 * G_pair(y / w.scale, p.rho).g0;
  const double rhs = w.c12 == 0.0 ? 0.0 : w.c12 * G_pair(2.0 * y / w.scale, p.rho).g12;
  return w.scale * w.scale * (lhs + rhs);
}

double GH_prime(double y, const RoughSmileParams& p) {
  const Interp w = interpolation(p.hurst);
  const double lhs = w.c0 == 0.0 ? 0.0 : w.c0 / w.scale * dG_pair(y / w.scale, p.rho).g0;
  const double rhs =
      w.c12 == 0.0 ? 0.0 : 2.0 * w.c12 / w.scale * dG_pair(2.0 * y / w.scale, p.rho).g12;
  return w.scale * w.scale * (lhs + rhs);
}

RoughSmile::RoughSmile(const RoughSmileParams& p) : params_(p) {
  check_rho(p.rho);
  if (!(p.hurst >= 0.0 && p.hurst <= 0.5)) throw DomainError("rough: hurst must lie in [0, 1/2]");
  series_ = smile::SmileSeries(normalized_gh_series(p));
}

smile::SmileDerivs RoughSmile::closed_form(double y) const {
  const double G = GH(y, params_);
  const double dG = GH_prime(y, params_);
  const double sqrtG = std::sqrt(G);
  const double f = std::abs(y) / sqrtG;
  const double F1 = std::copysign(1.0, y) * 0.5 * y * y * dG / (G * sqrtG);
  return {f, F1, 2.0 / y * (F1 - f)};
}

smile::SmileDerivs RoughSmile::operator()(double y) const {
  if (std::abs(y) < kSeriesThreshold) return series_.eval(y);
  return closed_form(y);
}

smile::SmileDerivs f_F1_F2_rough(double y, const RoughSmileParams& p) { return RoughSmile(p)(y); }

RoughState U_R_Y(double t, double spot, const ForwardCurve& curve, const OptionSpec& opt,
                 const RoughSmileParams& p) {
  const double maturity = opt.maturity;
  if (!(t < maturity)) throw DomainError("rough::U_R_Y: requires t < T");
  if (!(spot > 0.0)) throw DomainError("rough::U_R_Y: spot must be positive");
  curve.validate();
  constexpr double kTol = 1e-12;
  if (curve.times.front() > t + kTol || curve.times.back() < maturity - kTol)
    throw DomainError("rough::U_R_Y: forward curve does not cover (t, T]");

  std::vector<double> nodes{t};
  for (double s : curve.times)
    if (s > t + kTol && s < maturity - kTol) nodes.push_back(s);
  nodes.push_back(maturity);

  const double tau = maturity - t;
  const double power = p.hurst - 0.5;
  double integral = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double xa = curve.at(nodes[k]);
    const double xb = curve.at(nodes[k + 1]);
    const double ua = nodes[k] - t;
    const double ub = nodes[k + 1] - t;
    integral += 0.5 * (xa + xb) * (ub - ua);
    // int_{ua}^{ub} u^power (xa + m (u - ua)) du
    const double m = (xb - xa) / (ub - ua);
    const double i1 = (std::pow(ub, power + 1.0) - std::pow(ua, power + 1.0)) / (power + 1.0);
    const double i2 = (std::pow(ub, power + 2.0) - std::pow(ua, power + 2.0)) / (power + 2.0);
    weighted += (xa - m * ua) * i1 + m * i2;
  }

  RoughState st{};
  st.u = std::sqrt(integral / tau);
  // The constant eta sqrt(2H) cancels, so R_t stays finite at H = 0.
  st.r_exact = weighted / (std::pow(tau, power) * integral);
  st.y = kernel(tau, p) / st.u * std::log(opt.strike / spot);
  const smile::SmileDerivs d = f_F1_F2_rough(st.y, p);
  st.f = d.f;
  st.F1 = d.F1;
  st.F2 = d.F2;
  st.sigma_hat = st.u * d.f;
  return st;
}

}  // namespace vohedge::rough
