#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vohedge/analysis.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using namespace vohedge::analysis;

TEST_CASE("relred_sabr values") {
  CHECK(std::abs(relred_sabr(0.0)) < 1e-15);
  CHECK(std::abs(relred_sabr(std::sqrt(12.0 / 13.0)) - 0.5) < 1e-12);
  CHECK(std::abs(relred_sabr(-std::sqrt(12.0 / 13.0)) - 0.5) < 1e-12);
  CHECK(relred_sabr(1.0) == 1.0);
  CHECK(relred_sabr(-1.0) == 1.0);
  // 1 - 2 sqrt(0.19 / 1.57)
  CHECK(std::abs(relred_sabr(-0.9) - (1.0 - 2.0 * std::sqrt(0.19 / 1.57))) < 1e-15);
}

TEST_CASE("relred_rough values") {
  for (double rho : {-0.99, -0.9, -0.6, -0.2, 0.0, 0.5, 0.95})
    CHECK(std::abs(relred_rough(rho, 0.5) - relred_sabr(rho)) < 1e-12);
  CHECK(std::abs(relred_rough(std::sqrt(27.0 / 28.0), 0.0) - 0.5) < 1e-12);
  CHECK(std::abs(relred_rough(-std::sqrt(27.0 / 28.0), 0.0) - 0.5) < 1e-12);
  double last = -1.0;
  for (double H : {0.0, 0.1, 0.2, 0.35, 0.5}) {
    const double v = relred_rough(-0.9, H);
    CHECK(v > last);
    last = v;
  }
  CHECK(relred_rough(1.0, 0.2) == 1.0);
}

TEST_CASE("relred symmetry, ordering and ratio identity") {
  for (double rho = -0.99; rho <= 0.99; rho += 0.03) {
    CHECK(relred_sabr(rho) == doctest::Approx(relred_sabr(-rho)).epsilon(1e-14));
    for (double H : {0.0, 0.05, 0.1, 0.2, 0.35, 0.45, 0.5}) {
      const double r = relred_rough(rho, H);
      CHECK(std::abs(r - relred_rough(-rho, H)) < 1e-14);
      CHECK(r <= relred_sabr(rho) + 1e-14);
      const double ratio = (1.0 - rho * rho) / (1.0 - 2.0 * rho * rho * (H + 1.0) / ((H + 1.5) * (H + 1.5)));
      CHECK(std::abs(first_order_mshe_ratio(rho, H) - ratio) < 1e-14);
      CHECK(std::abs((1.0 - r) * (1.0 - r) - ratio) < 1e-12);
    }
  }
}

TEST_CASE("HKLW first-order reduction") {
  CHECK(relred_hklw_sabr(0.0) == 0.0);
  for (double rho : {-0.95, -0.6, 0.3}) {
    CHECK(relred_hklw_sabr(rho) < 0.0);
    // MSHE ratio HKLW / Delta = 1 / (1 - 3 rho^2 / 4)
    const double ratio = 1.0 / (1.0 - 0.75 * rho * rho);
    CHECK(std::abs((1.0 - relred_hklw_sabr(rho)) * (1.0 - relred_hklw_sabr(rho)) - ratio) < 1e-12);
  }
}

TEST_CASE("relative reduction examples") {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> n01;
  std::vector<double> a(5000), half(5000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = n01(gen);
    half[i] = 0.5 * a[i];
  }
  const std::vector<double> an(5000, 1.0);
  const RunStats same = summarize(a, a, an, an);
  CHECK(same.relred_empirical == 0.0);
  const RunStats h = summarize(a, half, an, an);
  CHECK(std::abs(h.relred_empirical - 0.5) < 1e-14);
  CHECK(h.relred_se < 1e-10);
  CHECK(std::isnan(h.relred_first_order));
  CHECK(std::abs(h.a.rmse - std::sqrt(h.a.mshe)) < 1e-15);
  CHECK(h.a.mshe_analytic == 1.0);
  CHECK_THROWS(summarize({}, {}, {}, {}));
  CHECK_THROWS(summarize(a, std::vector<double>(10, 0.0), an, an));
}

TEST_CASE("jackknife standard error of the MSHE") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> n01;
  std::vector<double> x(20000);
  for (double& v : x) v = 0.1 * n01(gen);
  const std::vector<double> an(x.size(), 0.01);
  const ErrorStats st = error_stats(x, an);
  // MSHE of N(0, 0.01): mean 0.01, sd of the estimator sqrt(2) 0.01 / sqrt(n).
  CHECK(st.mshe == doctest::Approx(0.01).epsilon(0.03));
  CHECK(st.mshe_se == doctest::Approx(std::sqrt(2.0) * 0.01 / std::sqrt(20000.0)).epsilon(0.05));
  CHECK(std::abs(st.mean) < 4.0 * 0.1 / std::sqrt(20000.0));
}

TEST_CASE("histogram") {
  std::vector<double> x;
  for (int i = 0; i < 999; ++i) x.push_back(std::sin(i * 0.37));
  x.push_back(1e3);  // far outlier lands in the top bin
  const Histogram h = histogram(x);
  CHECK(h.counts.size() == kHistogramBins);
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}) == x.size());
  CHECK(h.counts.back() >= 1);
  CHECK(h.hi > h.lo);
  const Histogram flat = histogram(std::vector<double>(10, 2.0));
  CHECK(std::accumulate(flat.counts.begin(), flat.counts.end(), std::size_t{0}) == 10);
}
