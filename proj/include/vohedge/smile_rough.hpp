#pragma once

#include "vohedge/smile_series.hpp"
#include "vohedge/types.hpp"

// Rough Bergomi implied volatility Sigma_hat = U f(Y), Y = kappa(T-t)/U log(K/S),
// with f built from the interpolated total-variance function G_H.

namespace vohedge::rough {

struct RoughSmileParams {
  double rho;
  double eta;
  double hurst;

  void validate() const;
};

/// Power-law kernel eta sqrt(2H) r^(H - 1/2); identically zero at H = 0.
double kernel(double r, const RoughSmileParams& p);

/// First-order ATM slope coefficient a_H = 1 / ((H + 1/2)(H + 3/2)).
double slope_coefficient(double hurst);

struct GPair {
  double g0;
  double g12;
};

/// Closed forms of G_0 and G_{1/2} = g^2.
GPair G_pair(double y, double rho);
GPair dG_pair(double y, double rho);

double GH(double y, const RoughSmileParams& p);
double GH_prime(double y, const RoughSmileParams& p);

inline constexpr double kSeriesThreshold = 1e-4;

/// f, F1, F2 for fixed (rho, H); the series coefficients are built once.
class RoughSmile {
 public:
  explicit RoughSmile(const RoughSmileParams& p);

  smile::SmileDerivs operator()(double y) const;
  smile::SmileDerivs closed_form(double y) const;
  smile::SmileDerivs series(double y) const { return series_.eval(y); }
  const RoughSmileParams& params() const { return params_; }

 private:
  RoughSmileParams params_;
  smile::SmileSeries series_;
};

smile::SmileDerivs f_F1_F2_rough(double y, const RoughSmileParams& p);

struct RoughState {
  double u;
  double r_exact;
  double y;
  double sigma_hat;
  double f;
  double F1;
  double F2;
};

/// U_t by trapezoid over the curve on [t, T]; R_t by product integration of
/// the kernel against the piecewise-linear curve (exact for flat curves).
RoughState U_R_Y(double t, double spot, const ForwardCurve& curve, const OptionSpec& opt,
                 const RoughSmileParams& p);

}  // namespace vohedge::rough
