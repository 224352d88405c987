#include "vohedge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "vohedge/bs_core.hpp"
#include "vohedge/dynamics.hpp"
#include "vohedge/errors.hpp"
#include "vohedge/version.hpp"

namespace vohedge::runner {

namespace {

// Discards above this fraction of paths abort the cell.
constexpr double kMaxDiscardFraction = 1e-4;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct PathStore {
  std::vector<double> spot;
  std::vector<double> alpha;
};

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write '" + file.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + file.string() + "'");
}

std::string group_name(ModelKind model, double rho, double hurst) {
  return std::string(to_string(model)) + "_rho" + num(rho) + "_H" + num(hurst);
}

}  // namespace

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

bool uses_sabr_simulator(const SweepConfig& config, double hurst) {
  return config.model == ModelKind::Sabr || hurst == 0.5;
}

std::vector<CellResult> run_group(const SweepConfig& config, double rho, double hurst) {
  const bool sabr = uses_sabr_simulator(config, hurst);
  ModelParams params;
  params.kind = sabr ? ModelKind::Sabr : ModelKind::RoughBergomi;
  params.eta = config.eta;
  params.alpha0 = config.alpha0;
  params.rho = rho;
  params.hurst = sabr ? 0.5 : hurst;
  params.spot0 = config.spot0;
  params.validate();
  const sim::GridSpec grid{config.n_steps, config.maturity};

  std::vector<hedge::StrategyKind> kinds;
  for (hedge::StrategyKind k : config.strategies)
    if (hedge::applicable(k, params.kind)) kinds.push_back(k);

  std::vector<hedge::StrategyEngine> engines;
  for (double strike : config.strike_grid)
    engines.emplace_back(params, OptionSpec{strike, config.maturity, config.spot0});

  const auto n_paths = static_cast<std::size_t>(config.n_paths);
  const std::size_t n_strikes = engines.size();
  std::vector<std::vector<hedge::PathOutcome>> outcomes(n_strikes,
                                                        std::vector<hedge::PathOutcome>(n_paths));
  std::vector<char> discarded(n_paths, 0);
  std::vector<double> level0(n_paths, config.alpha0);
  std::vector<PathStore> dumps(config.dump_paths ? n_paths : 0);

  parallel_for(n_paths, config.threads, [&](std::size_t i) {
    const sim::RngStream rng{config.seed, i};
    try {
      auto hedge_all = [&](const sim::PathView& view) {
        level0[i] = view.level[0];
        for (std::size_t s = 0; s < n_strikes; ++s)
          outcomes[s][i] = hedge::evaluate_path(view, kinds, engines[s]);
        if (config.dump_paths)
          dumps[i] = {{view.spot.begin(), view.spot.end()}, {view.alpha.begin(), view.alpha.end()}};
      };
      if (sabr) {
        const sim::SabrPath path = sim::simulate_sabr(params, grid, rng);
        hedge_all(sim::view(path));
      } else {
        const sim::RoughPath path = sim::simulate_rough(params, grid, rng);
        hedge_all(sim::view(path));
      }
    } catch (const NumericError&) {
      discarded[i] = 1;
    }
  });

  const auto n_discarded = static_cast<std::size_t>(std::count(discarded.begin(), discarded.end(), 1));
  if (static_cast<double>(n_discarded) > kMaxDiscardFraction * static_cast<double>(n_paths))
    throw NumericError("cell " + group_name(params.kind, rho, hurst) + ": " +
                       std::to_string(n_discarded) + " of " + std::to_string(n_paths) +
                       " paths discarded (non-finite values)");

  std::vector<std::uint64_t> retained;
  for (std::size_t i = 0; i < n_paths; ++i)
    if (!discarded[i]) retained.push_back(i);

  std::vector<CellResult> cells;
  for (std::size_t s = 0; s < n_strikes; ++s) {
    CellResult cell;
    cell.model = params.kind;
    cell.rho = rho;
    cell.hurst = params.hurst;
    cell.strike = config.strike_grid[s];
    cell.kinds = kinds;
    cell.path_index = retained;
    cell.n_discarded = n_discarded;

    if (config.capital == CapitalMode::MonteCarlo) {
      double sum = 0.0;
      for (std::uint64_t i : retained) sum += outcomes[s][i].payoff;
      cell.initial_capital = sum / static_cast<double>(retained.size());
    } else {
      const double lvl = level0[retained.front()];
      const hedge::LocalTerms lt =
          engines[s].local({0.0, config.spot0, config.alpha0, lvl});
      cell.initial_capital =
          bs::greeks({config.spot0, cell.strike, lt.sigma_hat, config.maturity}).price;
    }

    cell.errors.assign(kinds.size(), {});
    cell.analytic.assign(kinds.size(), {});
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      cell.errors[k].reserve(retained.size());
      cell.analytic[k].reserve(retained.size());
      for (std::uint64_t i : retained) {
        const hedge::PathOutcome& o = outcomes[s][i];
        cell.errors[k].push_back(o.payoff - cell.initial_capital - o.gains[k]);
        cell.analytic[k].push_back(o.analytic[k]);
      }
    }
    const auto delta_it = std::find(kinds.begin(), kinds.end(), hedge::StrategyKind::Delta);
    const std::size_t delta_idx = static_cast<std::size_t>(delta_it - kinds.begin());
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      cell.stats.push_back(analysis::error_stats(cell.errors[k], cell.analytic[k]));
      cell.relred.push_back(analysis::relative_reduction(cell.errors[delta_idx], cell.errors[k]));
    }
    cells.push_back(std::move(cell));
  }

  if (config.dump_paths && !config.output_dir.empty()) {
    std::string text = "path,step,t,S,alpha\n";
    for (std::uint64_t i : retained)
      for (int j = 0; j <= config.n_steps; ++j)
        text += std::to_string(i) + "," + std::to_string(j) + "," + num(grid.time(j)) + "," +
                num(dumps[i].spot[j]) + "," + num(dumps[i].alpha[j]) + "\n";
    std::filesystem::create_directories(config.output_dir);
    write_text(std::filesystem::path(config.output_dir) /
                   ("paths_" + group_name(params.kind, rho, params.hurst) + ".csv"),
               text);
  }
  return cells;
}

namespace {

double first_order_for(hedge::StrategyKind kind, double rho, double hurst) {
  switch (kind) {
    case hedge::StrategyKind::Delta: return 0.0;
    case hedge::StrategyKind::HKLW: return analysis::relred_hklw_sabr(rho);
    case hedge::StrategyKind::Bartlett: return analysis::relred_sabr(rho);
    case hedge::StrategyKind::AvoRough: return analysis::relred_rough(rho, hurst);
    case hedge::StrategyKind::Custom: break;
  }
  return std::nan("");
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, bool write_files) {
  config.validate();
  SweepResult result;
  std::vector<double> hurst_grid =
      config.model == ModelKind::Sabr ? std::vector<double>{0.5} : config.hurst_grid;

  for (double rho : config.rho_grid) {
    for (double hurst : hurst_grid) {
      result.first_order.push_back({rho, hurst, analysis::relred_rough(rho, hurst),
                                    analysis::first_order_mshe_ratio(rho, hurst)});
      if (hurst == 0.0) continue;  // first-order only; no simulation scheme at H = 0
      for (CellResult& cell : run_group(config, rho, hurst)) {
        for (std::size_t k = 0; k < cell.kinds.size(); ++k) {
          const analysis::ErrorStats& st = cell.stats[k];
          result.rows.push_back({cell.model, cell.rho, cell.hurst, cell.strike, cell.kinds[k],
                                 st.mshe, st.mshe_se, st.mshe_analytic, st.rmse,
                                 cell.relred[k].value,
                                 first_order_for(cell.kinds[k], cell.rho, cell.hurst),
                                 static_cast<int>(cell.path_index.size()), config.n_steps,
                                 config.seed, cell.relred[k].se, st.mean, st.variance,
                                 cell.n_discarded});
        }
        result.cells.push_back(std::move(cell));
      }
    }
  }
  if (write_files) write_outputs(config, result);
  return result;
}

std::string summary_csv(const SweepResult& result) {
  std::string out =
      "model,rho,hurst,strike,strategy,mshe_emp,mshe_emp_se,mshe_analytic,rmse,relred_emp,"
      "relred_fo,n_paths,n_steps,seed,relred_emp_se,error_mean,error_var,n_discarded\n";
  for (const SummaryRow& r : result.rows) {
    out += std::string(to_string(r.model)) + "," + num(r.rho) + "," + num(r.hurst) + "," +
           num(r.strike) + "," + std::string(hedge::to_string(r.strategy)) + "," +
           num(r.mshe_emp) + "," + num(r.mshe_emp_se) + "," + num(r.mshe_analytic) + "," +
           num(r.rmse) + "," + num(r.relred_emp) + "," + num(r.relred_fo) + "," +
           std::to_string(r.n_paths) + "," + std::to_string(r.n_steps) + "," +
           std::to_string(r.seed) + "," + num(r.relred_emp_se) + "," + num(r.error_mean) + "," +
           num(r.error_var) + "," + std::to_string(r.n_discarded) + "\n";
  }
  return out;
}

std::string first_order_csv(const SweepResult& result) {
  std::string out = "rho,hurst,relred_fo,mshe_ratio_fo\n";
  for (const FirstOrderRow& r : result.first_order)
    out += num(r.rho) + "," + num(r.hurst) + "," + num(r.relred) + "," + num(r.mshe_ratio) + "\n";
  return out;
}

std::string cell_name(const CellResult& cell) {
  return group_name(cell.model, cell.rho, cell.hurst) + "_K" + num(cell.strike);
}

std::string histogram_csv(const CellResult& cell) {
  std::string out = "strategy,bin,lo,hi,count\n";
  for (std::size_t k = 0; k < cell.kinds.size(); ++k) {
    const analysis::Histogram& h = cell.stats[k].hist;
    const double width = h.bin_width();
    for (std::size_t b = 0; b < h.counts.size(); ++b)
      out += std::string(hedge::to_string(cell.kinds[k])) + "," + std::to_string(b) + "," +
             num(h.lo + width * static_cast<double>(b)) + "," +
             num(h.lo + width * static_cast<double>(b + 1)) + "," + std::to_string(h.counts[b]) +
             "\n";
  }
  return out;
}

std::string records_csv(const CellResult& cell) {
  std::string out = "path,strategy,L_T,analytic_integral\n";
  for (std::size_t k = 0; k < cell.kinds.size(); ++k)
    for (std::size_t p = 0; p < cell.path_index.size(); ++p)
      out += std::to_string(cell.path_index[p]) + "," +
             std::string(hedge::to_string(cell.kinds[k])) + "," + num(cell.errors[k][p]) + "," +
             num(cell.analytic[k][p]) + "\n";
  return out;
}

void write_outputs(const SweepConfig& config, const SweepResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  write_text(dir / "summary.csv", summary_csv(result));
  write_text(dir / "first_order.csv", first_order_csv(result));
  for (const CellResult& cell : result.cells) {
    write_text(dir / ("hist_" + cell_name(cell) + ".csv"), histogram_csv(cell));
    if (config.write_records)
      write_text(dir / ("records_" + cell_name(cell) + ".csv"), records_csv(cell));
  }

  nlohmann::ordered_json manifest;
  manifest["version"] = kVersion;
  nlohmann::ordered_json cfg;
  cfg["model"] = to_string(config.model);
  cfg["eta"] = config.eta;
  cfg["alpha0"] = config.alpha0;
  cfg["rho"] = config.rho_grid;
  cfg["hurst"] = config.hurst_grid;
  cfg["strike"] = config.strike_grid;
  cfg["maturity"] = config.maturity;
  cfg["spot0"] = config.spot0;
  cfg["n_paths"] = config.n_paths;
  cfg["n_steps"] = config.n_steps;
  cfg["seed"] = config.seed;
  std::vector<std::string> strategies;
  for (hedge::StrategyKind k : config.strategies) strategies.emplace_back(hedge::to_string(k));
  cfg["strategies"] = strategies;
  cfg["capital"] = to_string(config.capital);
  manifest["config"] = cfg;
  manifest["seed"] = config.seed;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const CellResult& cell : result.cells)
    cells.push_back({{"cell", cell_name(cell)},
                     {"initial_capital", cell.initial_capital},
                     {"paths_retained", cell.path_index.size()},
                     {"paths_discarded", cell.n_discarded}});
  manifest["cells"] = cells;
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace vohedge::runner
