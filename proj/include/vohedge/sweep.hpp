#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vohedge/analysis.hpp"
#include "vohedge/config.hpp"
#include "vohedge/hedging.hpp"

namespace vohedge::runner {

struct SummaryRow {
  ModelKind model;
  double rho;
  double hurst;
  double strike;
  hedge::StrategyKind strategy;
  double mshe_emp;
  double mshe_emp_se;
  double mshe_analytic;
  double rmse;
  double relred_emp;
  double relred_fo;
  int n_paths;
  int n_steps;
  std::uint64_t seed;
  double relred_emp_se;
  double error_mean;
  double error_var;
  std::size_t n_discarded;
};

struct FirstOrderRow {
  double rho;
  double hurst;
  double relred;
  double mshe_ratio;
};

/// All strategies for one (rho, H, K) on the group's shared paths.
struct CellResult {
  ModelKind model;
  double rho;
  double hurst;
  double strike;
  double initial_capital;
  std::vector<hedge::StrategyKind> kinds;
  std::vector<std::uint64_t> path_index;     // retained paths, ascending
  std::vector<std::vector<double>> errors;    // [kind][path]
  std::vector<std::vector<double>> analytic;  // [kind][path]
  std::vector<analysis::ErrorStats> stats;    // [kind]
  std::vector<analysis::RelRed> relred;       // [kind], against Delta
  std::size_t n_discarded;
};

struct SweepResult {
  std::vector<CellResult> cells;
  std::vector<SummaryRow> rows;
  std::vector<FirstOrderRow> first_order;
};

/// Calls body(i) for i in [0, n) on `threads` workers (0: hardware
/// concurrency). Rethrows the exception of the lowest failing index.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

/// Simulates the (rho, H) group once and hedges every strike on it.
std::vector<CellResult> run_group(const SweepConfig& config, double rho, double hurst);

/// Runs every cell; writes the CSV outputs and manifest when write_files is set.
SweepResult run_sweep(const SweepConfig& config, bool write_files = true);

std::string summary_csv(const SweepResult& result);
std::string first_order_csv(const SweepResult& result);
std::string histogram_csv(const CellResult& cell);
std::string records_csv(const CellResult& cell);
std::string cell_name(const CellResult& cell);

void write_outputs(const SweepConfig& config, const SweepResult& result);

/// Runs exactly as a sweep would for a single group: true when the cell uses
/// the SABR simulator.
bool uses_sabr_simulator(const SweepConfig& config, double hurst);

}  // namespace vohedge::runner
