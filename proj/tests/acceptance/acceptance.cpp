// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vohedge/analysis.hpp"
#include "vohedge/bs_core.hpp"
#include "vohedge/dynamics.hpp"
#include "vohedge/hedging.hpp"
#include "vohedge/smile_rough.hpp"
#include "vohedge/smile_sabr.hpp"
#include "vohedge/sweep.hpp"

using namespace vohedge;
using hedge::StrategyKind;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void note(const std::string& line) {
  std::printf("  %s\n", line.c_str());
  std::fflush(stdout);
}

const runner::CellResult* find_cell(const runner::SweepResult& r, double rho, double hurst) {
  for (const auto& c : r.cells)
    if (c.rho == rho && c.hurst == hurst) return &c;
  return nullptr;
}

std::size_t kind_index(const runner::CellResult& c, StrategyKind k) {
  return static_cast<std::size_t>(std::find(c.kinds.begin(), c.kinds.end(), k) - c.kinds.begin());
}

double mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

// 1. HKLW = Bartlett / (1 - rho^2) per path on every SABR cell.
void criterion_1() {
  runner::SweepConfig c;
  c.model = ModelKind::Sabr;
  c.n_paths = 500;
  c.n_steps = 200;
  c.strategies = {StrategyKind::Delta, StrategyKind::HKLW, StrategyKind::Bartlett};
  const runner::SweepResult r = runner::run_sweep(c, false);
  double worst = 0.0;
  for (const auto& cell : r.cells) {
    const auto& h = cell.analytic[kind_index(cell, StrategyKind::HKLW)];
    const auto& b = cell.analytic[kind_index(cell, StrategyKind::Bartlett)];
    for (std::size_t p = 0; p < h.size(); ++p)
      worst = std::max(worst, std::abs(b[p] - (1.0 - cell.rho * cell.rho) * h[p]) / std::max(h[p], 1e-300));
  }
  report(1, worst <= 1e-12, "per-path analytic HKLW = Bartlett/(1-rho^2)",
         std::to_string(r.cells.size()) + " cells, max rel dev " + fmt("%.3g", worst));
}

// 2. Half-way closed-form values.
void criterion_2() {
  const double a = std::abs(analysis::relred_sabr(std::sqrt(12.0 / 13.0)) - 0.5);
  const double b = std::abs(analysis::relred_sabr(-std::sqrt(12.0 / 13.0)) - 0.5);
  const double c = std::abs(analysis::relred_rough(std::sqrt(27.0 / 28.0), 0.0) - 0.5);
  const double d = std::abs(analysis::relred_rough(-std::sqrt(27.0 / 28.0), 0.0) - 0.5);
  const double worst = std::max({a, b, c, d});
  report(2, worst <= 1e-12, "first-order reduction 1/2 at rho=+-sqrt(12/13) (SABR), +-sqrt(27/28) (H=0)",
         "max dev " + fmt("%.3g", worst));
}

// 3. SABR K = 1 empirical reduction against the first-order value.
void criterion_3() {
  runner::SweepConfig c;
  c.model = ModelKind::Sabr;
  c.rho_grid = {0.0, -0.6, -0.9, -0.95};
  c.strike_grid = {1.0};
  c.n_paths = 5000;
  c.n_steps = 500;
  c.strategies = {StrategyKind::Delta, StrategyKind::Bartlett};
  const runner::SweepResult r = runner::run_sweep(c, false);
  bool ok = true;
  std::string detail;
  for (double rho : c.rho_grid) {
    const auto* cell = find_cell(r, rho, 0.5);
    const auto& rr = cell->relred[kind_index(*cell, StrategyKind::Bartlett)];
    const double fo = analysis::relred_sabr(rho);
    const double dev = std::abs(rr.value - fo);
    ok = ok && dev <= 0.07;
    const auto& sd = cell->stats[kind_index(*cell, StrategyKind::Delta)];
    const auto& sb = cell->stats[kind_index(*cell, StrategyKind::Bartlett)];
    note("rho=" + fmt("%g", rho) + " empirical " + fmt("%.4f", rr.value) + " +- " + fmt("%.4f", rr.se) +
         " first-order " + fmt("%.4f", fo) + " (from error variances " +
         fmt("%.4f", 1.0 - std::sqrt(sb.variance / sd.variance)) + ", analytic quadrature " +
         fmt("%.4f", 1.0 - std::sqrt(sb.mshe_analytic / sd.mshe_analytic)) + ")");
    detail += (detail.empty() ? "" : ", ") + fmt("|dev|=%.4f", dev);
  }
  report(3, ok, "SABR K=1 empirical RelRed within 0.07 of first order (5000x500)", detail);
}

// 4. Empirical reduction non-increasing as H decreases.
void criterion_4() {
  runner::SweepConfig c;
  c.model = ModelKind::RoughBergomi;
  c.rho_grid = {-0.9};
  c.hurst_grid = {0.5, 0.35, 0.2, 0.1};
  c.strike_grid = {1.0};
  c.n_paths = 10000;
  c.n_steps = 1000;
  c.strategies = {StrategyKind::Delta, StrategyKind::Bartlett, StrategyKind::AvoRough};
  const runner::SweepResult r = runner::run_sweep(c, false);
  std::vector<analysis::RelRed> seq;
  for (double h : c.hurst_grid) {
    const auto* cell = find_cell(r, -0.9, h);
    const StrategyKind vo = cell->model == ModelKind::Sabr ? StrategyKind::Bartlett : StrategyKind::AvoRough;
    seq.push_back(cell->relred[kind_index(*cell, vo)]);
    note("H=" + fmt("%g", h) + " empirical " + fmt("%.4f", seq.back().value) + " +- " +
         fmt("%.4f", seq.back().se) + " first-order " + fmt("%.4f", analysis::relred_rough(-0.9, h)));
  }
  bool ok = true;
  double worst = -1e300;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    // Increase from the smoother to the rougher cell, in units of one standard error.
    const double se = std::max(seq[i].se, seq[i - 1].se);
    const double excess = seq[i].value - seq[i - 1].value;
    worst = std::max(worst, excess / se);
    ok = ok && excess <= se;
  }
  report(4, ok, "rho=-0.9 K=1 empirical RelRed non-increasing as H decreases (10000x1000)",
         "max increase " + fmt("%.3g", worst) + " SE");
}

// 5. Near-complete market: analytic Bartlett / Delta.
void criterion_5() {
  ModelParams p;
  p.kind = ModelKind::Sabr;
  p.rho = -0.9999;
  const OptionSpec opt{1.0, 1.0, 1.0};
  const hedge::StrategyEngine engine(p, opt);
  const std::vector<StrategyKind> kinds{StrategyKind::Delta, StrategyKind::Bartlett};
  std::vector<double> d, b;
  for (std::uint64_t k = 0; k < 2000; ++k) {
    const sim::SabrPath path = sim::simulate_sabr(p, {500, 1.0}, sim::RngStream{1, k});
    const hedge::PathOutcome o = hedge::evaluate_path(sim::view(path), kinds, engine);
    d.push_back(o.analytic[0]);
    b.push_back(o.analytic[1]);
  }
  const double ratio = mean(b) / mean(d);
  report(5, ratio <= 5e-4, "SABR rho=-0.9999 K=1 analytic MSHE(Bartlett)/MSHE(Delta) <= 5e-4",
         "ratio " + fmt("%.4g", ratio) + ", at-the-money closed form (1-rho^2)/(1-3rho^2/4) = " +
             fmt("%.4g", (1.0 - p.rho * p.rho) / (1.0 - 0.75 * p.rho * p.rho)));
}

// 6. Empirical Delta-hedge MSHE against the analytic quadrature.
void criterion_6() {
  runner::SweepConfig c;
  c.model = ModelKind::Sabr;
  c.rho_grid = {-0.6};
  c.strike_grid = {1.0};
  c.n_paths = 10000;
  c.n_steps = 1000;
  c.strategies = {StrategyKind::Delta};
  const runner::SweepResult r = runner::run_sweep(c, false);
  const auto& st = r.cells.front().stats.front();
  const double rel = st.mshe / st.mshe_analytic - 1.0;
  report(6, std::abs(rel) <= 0.15, "SABR rho=-0.6 K=1 Delta: empirical MSHE within 15% of analytic (10000x1000)",
         "empirical " + fmt("%.5g", st.mshe) + " +- " + fmt("%.2g", st.mshe_se) + ", analytic " +
             fmt("%.5g", st.mshe_analytic) + ", rel dev " + fmt("%+.3f", rel));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double central(const std::function<double(double)>& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

// 7. Property suites.
void criterion_7() {
  bool all = true;
  auto sub = [&](const std::string& name, bool ok, const std::string& detail) {
    note(std::string(ok ? "ok   " : "FAIL ") + name + " (" + detail + ")");
    all = all && ok;
  };
  const std::vector<double> rhos{-0.95, -0.9, -0.6, 0.0, 0.6};
  const std::vector<double> hursts{0.0, 0.1, 0.2, 0.35, 0.5};

  {
    double worst = 0.0;
    for (double rho : rhos)
      for (double y = -4.0; y <= 4.0; y += 0.05) {
        const auto gp = rough::G_pair(y, rho);
        worst = std::max(worst, std::abs(rough::GH(y, {rho, 0.5, 0.5}) - gp.g12) / std::max(1.0, gp.g12));
        worst = std::max(worst, std::abs(rough::GH(y, {rho, 0.5, 0.0}) - gp.g0) / std::max(1.0, gp.g0));
      }
    sub("G_H endpoint reductions", worst <= 1e-12, "max dev " + fmt("%.3g", worst));
  }
  {
    double worst = 0.0;
    for (double rho : rhos)
      for (double H : hursts) {
        const rough::RoughSmile smile({rho, 0.5, H});
        for (double y : {-2.0, -0.6, -0.1, 0.05, 0.3, 1.2, 3.0}) {
          const auto d = smile(y);
          const double fp = central([&](double x) { return smile(x).f; }, y, 1e-5);
          worst = std::max(worst, std::abs(d.F2 + 2.0 * fp));
          worst = std::max(worst, std::abs(d.F1 - (d.f - y * fp)));
          const double gp = central([&](double x) { return rough::GH(x, smile.params()); }, y, 1e-5);
          worst = std::max(worst, std::abs(rough::GH_prime(y, smile.params()) - gp) / std::max(1.0, std::abs(gp)));
        }
      }
    for (double rho : rhos)
      for (double y : {-2.0, -0.2, 0.4, 2.5}) {
        const auto d = sabr::smile_functions(y, rho);
        const double fp = central([&](double x) { return sabr::f(x, rho); }, y, 1e-5);
        worst = std::max(worst, std::abs(d.F2 + 2.0 * fp));
        worst = std::max(worst, std::abs(d.F1 - (d.f - y * fp)));
      }
    for (double K : {0.6, 0.8, 1.0, 1.25, 1.66})
      for (double vol : {0.1, 0.4, 0.9}) {
        const bs::Greeks g = bs::greeks({1.0, K, vol, 1.0});
        const double fd_d = central([&](double s) { return bs::greeks({s, K, vol, 1.0}).price; }, 1.0, 1e-5);
        const double fd_v = central([&](double v) { return bs::greeks({1.0, K, v, 1.0}).price; }, vol, 1e-5);
        worst = std::max({worst, std::abs(g.delta - fd_d), std::abs(g.vega - fd_v)});
      }
    sub("finite-difference derivative checks (f', F1, F2, G_H', Greeks)", worst <= 1e-6,
        "max abs dev " + fmt("%.3g", worst));
  }
  {
    std::mt19937_64 gen(7);
    std::normal_distribution<double> noise(0.0, 0.05);
    int violations = 0;
    for (int model = 0; model < 2; ++model) {
      ModelParams p;
      p.kind = model == 0 ? ModelKind::Sabr : ModelKind::RoughBergomi;
      p.rho = -0.7;
      p.hurst = model == 0 ? 0.5 : 0.2;
      const OptionSpec opt{1.25, 1.0, 1.0};
      const StrategyKind vo = model == 0 ? StrategyKind::Bartlett : StrategyKind::AvoRough;
      sim::SabrPath sp;
      sim::RoughPath rp;
      sim::PathView v;
      if (model == 0) {
        sp = sim::simulate_sabr(p, {200, 1.0}, sim::RngStream{3, 1});
        v = sim::view(sp);
      } else {
        rp = sim::simulate_rough(p, {200, 1.0}, sim::RngStream{3, 1});
        v = sim::view(rp);
      }
      const auto pos = hedge::position_series(v, vo, opt, p);
      const double best = hedge::mshe_general(v, pos, opt, p);
      for (int t = 0; t < 100; ++t) {
        auto q = pos;
        for (double& x : q) x += noise(gen);
        if (hedge::mshe_general(v, q, opt, p) < best) ++violations;
      }
    }
    sub("pointwise optimality under 100 random perturbations (SABR and rough)", violations == 0,
        std::to_string(violations) + " violations");
  }
  {
    ModelParams s;
    s.kind = ModelKind::Sabr;
    s.rho = -0.6;
    ModelParams r = s;
    r.kind = ModelKind::RoughBergomi;
    const sim::GridSpec grid{500, 1.0};
    const auto normals = sim::correlated_normals(sim::RngStream{1, 0}, grid.n_steps, s.rho);
    const sim::SabrPath a = sim::simulate_sabr(s, grid, normals);
    const sim::RoughPath b = sim::simulate_rough(r, grid, normals);
    double worst = 0.0;
    for (int i = 0; i <= grid.n_steps; ++i)
      worst = std::max({worst, std::abs(a.spot[i] - b.spot[i]), std::abs(a.alpha[i] - b.alpha[i])});
    sub("rough path at H=1/2 equals SABR path given shared normals", worst <= 1e-12,
        "max abs dev " + fmt("%.3g", worst) + "; rough alpha^2 vs SABR alpha martingale, drift gap exp(-eta^2 t/8)");
  }
  {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "vohedge_acceptance";
    fs::remove_all(base);
    runner::SweepConfig c;
    c.n_paths = 200;
    c.n_steps = 50;
    c.rho_grid = {-0.9, 0.0};
    c.hurst_grid = {0.5, 0.2};
    c.threads = 1;
    c.output_dir = (base / "a").string();
    runner::run_sweep(c);
    c.output_dir = (base / "b").string();
    runner::run_sweep(c);
    c.output_dir = (base / "c").string();
    c.threads = 4;
    runner::run_sweep(c);
    bool same = true;
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(base / "a")) {
      const auto name = entry.path().filename();
      const std::string ref = slurp(entry.path());
      same = same && ref == slurp(base / "b" / name) && ref == slurp(base / "c" / name);
      ++files;
    }
    fs::remove_all(base);
    sub("byte-identical outputs on rerun and with 1 vs 4 threads", same && files > 0,
        std::to_string(files) + " files compared");
  }
  report(7, all, "property suites", all ? "all sub-checks pass" : "see sub-checks above");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  std::printf("%d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
