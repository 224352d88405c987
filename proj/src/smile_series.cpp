#include "vohedge/smile_series.hpp"

#include <cmath>

namespace vohedge::smile {

Coeffs sabr_g_over_y(double rho) {
  // 1/sqrt(1 - 2 x t + t^2) = sum P_n(x) t^n, integrate term by term.
  const double x = -rho;
  Coeffs c{};
  double p_prev = 1.0;
  double p = x;
  double scale = 1.0;
  c[0] = 1.0;
  for (int n = 1; n < kSeriesTerms; ++n) {
    scale *= 0.5;
    c[n] = p * scale / (n + 1);
    const double next = ((2 * n + 1) * x * p - n * p_prev) / (n + 1);
    p_prev = p;
    p = next;
  }
  return c;
}

Coeffs g0_over_y2(double rho) {
  // 1/(1 - 2 x t + t^2) = sum U_n(x) t^n.
  const double x = -rho;
  Coeffs c{};
  double u_prev = 1.0;
  double u = 2.0 * x;
  c[0] = 1.0;
  for (int n = 1; n < kSeriesTerms; ++n) {
    c[n] = 2.0 * u / (n + 2);
    const double next = 2.0 * x * u - u_prev;
    u_prev = u;
    u = next;
  }
  return c;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs c{};
  for (int i = 0; i < kSeriesTerms; ++i)
    for (int j = 0; i + j < kSeriesTerms; ++j) c[i + j] += a[i] * b[j];
  return c;
}

Coeffs power(const Coeffs& a, double power) {
  Coeffs b{};
  b[0] = 1.0;
  for (int n = 1; n < kSeriesTerms; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += ((power + 1.0) * k - n) * a[k] * b[n - k];
    b[n] = acc / n;
  }
  return b;
}

SmileSeries::SmileSeries(const Coeffs& q) : f_(power(q, -0.5)) {}

SmileDerivs SmileSeries::eval(double y) const {
  // Horner for f, f' simultaneously.
  double f = 0.0;
  double fp = 0.0;
  for (int k = kSeriesTerms - 1; k >= 0; --k) {
    fp = fp * y + f;
    f = f * y + f_[k];
  }
  return {f, f - y * fp, -2.0 * fp};
}

}  // namespace vohedge::smile
