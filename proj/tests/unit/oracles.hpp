#pragma once

// Independent reference computations used by the unit tests. Nothing here
// calls into the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& fn, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = fn(a) + fn(b);
  for (int i = 1; i < n; ++i) acc += fn(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

/// E[(S_T - K)^+] for lognormal S_T with zero drift, integrating over the
/// standard normal variable.
inline double lognormal_call(double spot, double strike, double vol, double tau) {
  const double sd = vol * std::sqrt(tau);
  auto integrand = [&](double z) {
    const double st = spot * std::exp(sd * z - 0.5 * sd * sd);
    return std::max(st - strike, 0.0) * std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  };
  // Kink at the strike: split there.
  const double z_k = (std::log(strike / spot) + 0.5 * sd * sd) / sd;
  return simpson(integrand, z_k, 12.0, 200000);
}

inline double central_diff(const std::function<double(double)>& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

/// Hagan's g by direct evaluation of the printed formula.
inline double sabr_g_direct(double y, double rho) {
  return -2.0 * std::log((std::sqrt(1.0 + rho * y + y * y / 4.0) - rho - y / 2.0) / (1.0 - rho));
}

/// G_0 by the printed arctan-difference formula.
inline double g0_direct(double y, double rho) {
  const double s = std::sqrt(1.0 - rho * rho);
  return std::log(1.0 + 2.0 * rho * y + y * y) +
         2.0 * rho / s * (std::atan(rho / s) - std::atan((y + rho) / s));
}

}  // namespace oracle
