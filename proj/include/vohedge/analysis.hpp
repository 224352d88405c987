#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vohedge::analysis {

/// First-order relative RMSE reduction of the variance-optimal hedge over Delta
/// in SABR: 1 - 2 sqrt((1 - rho^2) / (4 - 3 rho^2)).
double relred_sabr(double rho);

/// Rough Bergomi analogue:
/// 1 - (H + 3/2) sqrt((1 - rho^2) / ((H + 3/2)^2 - 2 (H + 1) rho^2)).
double relred_rough(double rho, double hurst);

/// First-order MSHE ratio variance-optimal / Delta.
double first_order_mshe_ratio(double rho, double hurst);

/// First-order relative reduction of the HKLW hedge over Delta in SABR (negative
/// for rho != 0).
double relred_hklw_sabr(double rho);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;

  double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
};

inline constexpr std::size_t kHistogramBins = 101;

/// Equal-width bins over [mean - 5 sd, mean + 5 sd]; values outside fall into
/// the edge bins so the counts add up to the sample size.
Histogram histogram(std::span<const double> values, std::size_t bins = kHistogramBins);

struct ErrorStats {
  double mean = 0.0;
  double variance = 0.0;
  double mshe = 0.0;     // mean of squared terminal errors
  double mshe_se = 0.0;  // jackknife standard error
  double mshe_analytic = 0.0;
  double rmse = 0.0;
  Histogram hist;
};

ErrorStats error_stats(std::span<const double> errors, std::span<const double> analytic);

struct RunStats {
  ErrorStats a;  // Delta
  ErrorStats b;  // variance-optimal
  double relred_empirical = 0.0;
  double relred_se = 0.0;  // jackknife
  double relred_first_order = 0.0;
};

/// Compares a reference strategy `a` to `b` on the same paths.
RunStats summarize(std::span<const double> errors_a, std::span<const double> errors_b,
                   std::span<const double> analytic_a, std::span<const double> analytic_b);

/// 1 - rmse_b / rmse_a with its jackknife standard error.
struct RelRed {
  double value;
  double se;
};
RelRed relative_reduction(std::span<const double> errors_a, std::span<const double> errors_b);

}  // namespace vohedge::analysis
