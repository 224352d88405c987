#include "vohedge/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vohedge/errors.hpp"

namespace vohedge::runner {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
  throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(value) + "' (" +
                    std::string(why) + ")");
}

double parse_double(std::string_view key, std::string_view token) {
  token = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty() || !std::isfinite(v))
    bad_value(key, token, "expected a number");
  return v;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view token) {
  token = trim(token);
  Int v{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
    bad_value(key, token, "expected an integer");
  return v;
}

bool parse_bool(std::string_view key, std::string_view token) {
  token = trim(token);
  if (token == "true" || token == "1" || token == "yes") return true;
  if (token == "false" || token == "0" || token == "no") return false;
  bad_value(key, token, "expected true/false");
}

std::vector<std::string_view> split_list(std::string_view key, std::string_view value) {
  value = trim(value);
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') bad_value(key, value, "unbalanced brackets");
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = value.find(',');
    const std::string_view item = trim(value.substr(0, comma));
    if (item.empty()) bad_value(key, value, "empty list element");
    items.push_back(item);
    if (comma == std::string_view::npos) break;
    value = value.substr(comma + 1);
  }
  return items;
}

}  // namespace

std::string_view to_string(CapitalMode mode) {
  return mode == CapitalMode::MonteCarlo ? "mc" : "bs";
}

std::vector<double> parse_number_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  for (std::string_view item : split_list(key, value)) out.push_back(parse_double(key, item));
  return out;
}

void apply_setting(SweepConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "model") {
    if (value == "sabr")
      c.model = ModelKind::Sabr;
    else if (value == "rough")
      c.model = ModelKind::RoughBergomi;
    else
      bad_value(key, value, "expected sabr or rough");
  } else if (key == "eta") {
    c.eta = parse_double(key, value);
  } else if (key == "alpha0") {
    c.alpha0 = parse_double(key, value);
  } else if (key == "rho") {
    c.rho_grid = parse_number_list(key, value);
  } else if (key == "hurst") {
    c.hurst_grid = parse_number_list(key, value);
  } else if (key == "strike") {
    c.strike_grid = parse_number_list(key, value);
  } else if (key == "maturity") {
    c.maturity = parse_double(key, value);
  } else if (key == "spot0") {
    c.spot0 = parse_double(key, value);
  } else if (key == "n_paths") {
    c.n_paths = parse_int<int>(key, value);
  } else if (key == "n_steps") {
    c.n_steps = parse_int<int>(key, value);
  } else if (key == "seed") {
    c.seed = parse_int<std::uint64_t>(key, value);
  } else if (key == "strategies") {
    c.strategies.clear();
    for (std::string_view item : split_list(key, value)) {
      try {
        c.strategies.push_back(hedge::strategy_from_string(item));
      } catch (const ConfigError&) {
        bad_value(key, item, "expected delta, hklw, bartlett or avo");
      }
    }
  } else if (key == "output_dir") {
    if (value.empty()) bad_value(key, value, "empty path");
    c.output_dir = std::string(value);
  } else if (key == "capital") {
    if (value == "mc")
      c.capital = CapitalMode::MonteCarlo;
    else if (value == "bs")
      c.capital = CapitalMode::BlackScholes;
    else
      bad_value(key, value, "expected mc or bs");
  } else if (key == "threads") {
    c.threads = parse_int<int>(key, value);
  } else if (key == "dump_paths") {
    c.dump_paths = parse_bool(key, value);
  } else if (key == "write_records") {
    c.write_records = parse_bool(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

SweepConfig parse_config(std::string_view text) {
  SweepConfig config;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    try {
      apply_setting(config, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  config.validate();
  return config;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void SweepConfig::validate() const {
  if (rho_grid.empty() || hurst_grid.empty() || strike_grid.empty())
    throw ConfigError("rho, hurst and strike grids must be non-empty");
  if (!(eta > 0.0)) throw ConfigError("eta must be positive");
  if (!(alpha0 > 0.0)) throw ConfigError("alpha0 must be positive");
  if (!(maturity > 0.0)) throw ConfigError("maturity must be positive");
  if (!(spot0 > 0.0)) throw ConfigError("spot0 must be positive");
  if (n_paths < 2) throw ConfigError("n_paths must be >= 2");
  if (n_steps < 2) throw ConfigError("n_steps must be >= 2");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  for (double r : rho_grid)
    if (!(std::abs(r) <= kRhoGuard)) throw ConfigError("rho grid entries must satisfy |rho| <= 0.9999");
  for (double h : hurst_grid)
    if (!(h >= 0.0 && h <= 0.5)) throw ConfigError("hurst grid entries must lie in [0, 0.5]");
  for (double k : strike_grid)
    if (!(k > 0.0)) throw ConfigError("strike grid entries must be positive");
  if (std::find(strategies.begin(), strategies.end(), hedge::StrategyKind::Delta) ==
      strategies.end())
    throw ConfigError("strategies must include delta (reference for relative reduction)");
}

}  // namespace vohedge::runner
