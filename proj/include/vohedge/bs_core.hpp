#pragma once

// Black-Scholes call pricing with zero rates.

namespace vohedge::bs {

struct BsInputs {
  double spot;
  double strike;
  double vol;
  double tau;
};

struct Greeks {
  double price;
  double delta;
  double vega;
  double d_plus;
  double d_minus;
};

double norm_cdf(double x);
double norm_pdf(double x);

/// Price, Delta and Vega of a call. At vol*sqrt(tau) == 0 the intrinsic
/// limit is returned with Delta = 1/2 exactly at the money.
Greeks greeks(const BsInputs& in);

/// Black-Scholes volatility reproducing `price`. Requires
/// max(spot - strike, 0) < price < spot.
double implied_vol(double price, double spot, double strike, double tau);

}  // namespace vohedge::bs
