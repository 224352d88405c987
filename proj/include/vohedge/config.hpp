#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vohedge/hedging.hpp"
#include "vohedge/types.hpp"

namespace vohedge::runner {

enum class CapitalMode {
  MonteCarlo,    // w = sample mean of the payoff over the cell's paths
  BlackScholes,  // w = c_BS(T, S0, Sigma_hat_0)
};

/// Sweep definition. Defaults reproduce the published experiment grid.
///
/// `model = sabr` runs only H = 1/2 cells. `model = rough` runs every entry of
/// the Hurst grid: H = 1/2 on the SABR simulator, 0 < H < 1/2 on the rough
/// Bergomi simulator, and H = 0 only in the first-order table.
struct SweepConfig {
  ModelKind model = ModelKind::RoughBergomi;
  double eta = 0.5;
  double alpha0 = 0.4;
  std::vector<double> rho_grid{-0.95, -0.9, -0.8, -0.6, 0.0};
  std::vector<double> hurst_grid{0.5, 0.35, 0.2, 0.1};
  std::vector<double> strike_grid{0.6, 0.8, 1.0, 1.25, 1.66};
  double maturity = 1.0;
  double spot0 = 1.0;
  int n_paths = 10000;
  int n_steps = 1000;
  std::uint64_t seed = 1;
  std::vector<hedge::StrategyKind> strategies{hedge::StrategyKind::Delta, hedge::StrategyKind::HKLW,
                                              hedge::StrategyKind::Bartlett,
                                              hedge::StrategyKind::AvoRough};
  std::string output_dir = "vohedge_out";
  CapitalMode capital = CapitalMode::MonteCarlo;
  int threads = 0;  // 0: hardware concurrency
  bool dump_paths = false;
  bool write_records = false;

  void validate() const;
};

/// Applies one `key = value` assignment (list values comma separated,
/// optionally wrapped in brackets). Throws ConfigError naming the key.
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

/// Flat key-value text; `#` starts a comment; unknown keys are rejected.
/// Errors carry the 1-based line number.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string& path);

std::vector<double> parse_number_list(std::string_view key, std::string_view value);
std::string_view to_string(CapitalMode mode);

}  // namespace vohedge::runner
