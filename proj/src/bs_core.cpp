#include "vohedge/bs_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vohedge/errors.hpp"

namespace vohedge::bs {

namespace {

void check_inputs(const BsInputs& in) {
  if (!(in.spot > 0.0) || !(in.strike > 0.0))
    throw DomainError("bs: spot and strike must be positive");
  if (!(in.tau >= 0.0) || !(in.vol >= 0.0))
    throw DomainError("bs: tau and vol must be nonnegative");
}

constexpr double kVolLo = 1e-8;
constexpr double kVolHi = 5.0;
constexpr int kMaxIter = 100;

}  // namespace

double norm_cdf(double x) {
  // erfc keeps full relative accuracy in the lower tail.
  return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
}

double norm_pdf(double x) {
  constexpr double kInvSqrt2Pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

Greeks greeks(const BsInputs& in) {
  check_inputs(in);
  const double intrinsic = std::max(in.spot - in.strike, 0.0);
  const double sd = in.vol * std::sqrt(in.tau);
  if (sd == 0.0) {
    const double delta = in.spot > in.strike ? 1.0 : (in.spot < in.strike ? 0.0 : 0.5);
    const double d = in.spot > in.strike ? INFINITY : (in.spot < in.strike ? -INFINITY : 0.0);
    return {intrinsic, delta, 0.0, d, d};
  }
  const double d_plus = std::log(in.spot / in.strike) / sd + 0.5 * sd;
  const double d_minus = d_plus - sd;
  double price = in.spot * norm_cdf(d_plus) - in.strike * norm_cdf(d_minus);
  price = std::clamp(price, intrinsic, in.spot);
  return {price, norm_cdf(d_plus), in.spot * norm_pdf(d_plus) * std::sqrt(in.tau), d_plus,
          d_minus};
}

double implied_vol(double price, double spot, double strike, double tau) {
  if (!(spot > 0.0) || !(strike > 0.0) || !(tau > 0.0))
    throw DomainError("implied_vol: spot, strike and tau must be positive");
  const double intrinsic = std::max(spot - strike, 0.0);
  if (!(price > intrinsic) || !(price < spot))
    throw DomainError("implied_vol: price " + std::to_string(price) +
                      " outside no-arbitrage bounds");

  auto value = [&](double v) { return greeks({spot, strike, v, tau}).price - price; };

  double lo = kVolLo;
  double hi = kVolHi;
  if (value(lo) >= 0.0) {
    // Target sits below the bracket: solve on [0, lo] where price(0) = intrinsic.
    lo = 0.0;
    hi = kVolLo;
  }
  while (value(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e3) throw NumericError("implied_vol: price not bracketed");
  }

  double vol = 0.5 * (lo + hi);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const Greeks g = greeks({spot, strike, vol, tau});
    const double diff = g.price - price;
    if (std::abs(diff) <= 1e-13 * std::max(1.0, price) || hi - lo < 1e-15) return vol;
    if (diff > 0.0)
      hi = vol;
    else
      lo = vol;
    const double newton = g.vega > 0.0 ? vol - diff / g.vega : NAN;
    vol = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
  }
  throw NumericError("implied_vol: no convergence after 100 iterations");
}

}  // namespace vohedge::bs
