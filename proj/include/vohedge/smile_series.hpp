#pragma once

#include <array>

// Taylor expansions of the smile functions around the money (y = 0), where
// the closed forms y/g(y) and |y|/sqrt(G(y)) are 0/0.

namespace vohedge::smile {

/// f with the derived quantities F1 = f - y f' and F2 = -2 f'.
struct SmileDerivs {
  double f;
  double F1;
  double F2;
};

inline constexpr int kSeriesTerms = 8;
using Coeffs = std::array<double, kSeriesTerms>;

/// Coefficients of g(y)/y for g'(y) = (1 + rho y + y^2/4)^{-1/2}, g(0) = 0.
/// Generated from the Legendre generating function with x = -rho, t = y/2.
Coeffs sabr_g_over_y(double rho);

/// Coefficients of G_0(y)/y^2 for G_0'(y) = 2y / (1 + 2 rho y + y^2).
/// Generated from the Chebyshev-U generating function with x = -rho.
Coeffs g0_over_y2(double rho);

Coeffs multiply(const Coeffs& a, const Coeffs& b);

/// a(y)^power for a(0) = 1 (Miller's recurrence).
Coeffs power(const Coeffs& a, double power);

/// Series of f, F1, F2 from the normalised total variance Q(y) = G(y)/y^2,
/// using f = Q^{-1/2}.
class SmileSeries {
 public:
  SmileSeries() = default;
  explicit SmileSeries(const Coeffs& q);

  SmileDerivs eval(double y) const;
  const Coeffs& f_coeffs() const { return f_; }

 private:
  Coeffs f_{};
};

}  // namespace vohedge::smile
