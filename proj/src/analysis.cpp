#include "vohedge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vohedge/errors.hpp"

namespace vohedge::analysis {

double relred_sabr(double rho) {
  const double r2 = rho * rho;
  return 1.0 - 2.0 * std::sqrt((1.0 - r2) / (4.0 - 3.0 * r2));
}

double relred_rough(double rho, double hurst) {
  const double r2 = rho * rho;
  const double h32 = hurst + 1.5;
  return 1.0 - h32 * std::sqrt((1.0 - r2) / (h32 * h32 - 2.0 * (hurst + 1.0) * r2));
}

double first_order_mshe_ratio(double rho, double hurst) {
  const double r2 = rho * rho;
  const double h32 = hurst + 1.5;
  return (1.0 - r2) / (1.0 - 2.0 * r2 * (hurst + 1.0) / (h32 * h32));
}

double relred_hklw_sabr(double rho) { return 1.0 - 1.0 / std::sqrt(1.0 - 0.75 * rho * rho); }

Histogram histogram(std::span<const double> values, std::size_t bins) {
  if (values.empty() || bins == 0) throw DomainError("histogram: empty input");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double sd = std::sqrt(ss / n);
  if (!(sd > 0.0)) sd = std::max(std::abs(mean), 1.0) * 1e-12;

  Histogram h{mean - 5.0 * sd, mean + 5.0 * sd, std::vector<std::size_t>(bins, 0)};
  const double width = h.bin_width();
  for (double v : values) {
    const double pos = std::floor((v - h.lo) / width);
    const auto idx = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    ++h.counts[idx];
  }
  return h;
}

ErrorStats error_stats(std::span<const double> errors, std::span<const double> analytic) {
  if (errors.empty()) throw DomainError("error_stats: empty input");
  if (!analytic.empty() && analytic.size() != errors.size())
    throw DomainError("error_stats: analytic size mismatch");
  const double n = static_cast<double>(errors.size());
  ErrorStats s;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double e : errors) {
    sum += e;
    sum_sq += e * e;
  }
  s.mean = sum / n;
  s.mshe = sum_sq / n;
  s.variance = std::max(s.mshe - s.mean * s.mean, 0.0);
  s.rmse = std::sqrt(s.mshe);
  // Jackknife of a sample mean reduces to sd / sqrt(n) with the n-1 divisor.
  if (errors.size() > 1) {
    double dev = 0.0;
    for (double e : errors) dev += (e * e - s.mshe) * (e * e - s.mshe);
    s.mshe_se = std::sqrt(dev / (n - 1.0) / n);
  }
  if (!analytic.empty())
    s.mshe_analytic = std::accumulate(analytic.begin(), analytic.end(), 0.0) / n;
  s.hist = histogram(errors);
  return s;
}

RelRed relative_reduction(std::span<const double> errors_a, std::span<const double> errors_b) {
  if (errors_a.empty() || errors_a.size() != errors_b.size())
    throw DomainError("relative_reduction: inputs must be non-empty and of equal length");
  const std::size_t n = errors_a.size();
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += errors_a[i] * errors_a[i];
    sb += errors_b[i] * errors_b[i];
  }
  const double full = sa > 0.0 ? 1.0 - std::sqrt(sb / sa) : 0.0;
  if (n < 2) return {full, 0.0};

  // Leave-one-out replicates.
  std::vector<double> reps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = sa - errors_a[i] * errors_a[i];
    const double b = sb - errors_b[i] * errors_b[i];
    reps[i] = a > 0.0 ? 1.0 - std::sqrt(b / a) : 0.0;
  }
  const double mean = std::accumulate(reps.begin(), reps.end(), 0.0) / static_cast<double>(n);
  double var = 0.0;
  for (double r : reps) var += (r - mean) * (r - mean);
  var *= static_cast<double>(n - 1) / static_cast<double>(n);
  return {full, std::sqrt(var)};
}

RunStats summarize(std::span<const double> errors_a, std::span<const double> errors_b,
                   std::span<const double> analytic_a, std::span<const double> analytic_b) {
  if (errors_a.empty()) throw DomainError("summarize: empty input");
  if (errors_a.size() != errors_b.size())
    throw DomainError("summarize: path counts differ between strategies");
  RunStats r;
  r.a = error_stats(errors_a, analytic_a);
  r.b = error_stats(errors_b, analytic_b);
  const RelRed rr = relative_reduction(errors_a, errors_b);
  r.relred_empirical = rr.value;
  r.relred_se = rr.se;
  r.relred_first_order = std::nan("");
  return r;
}

}  // namespace vohedge::analysis
