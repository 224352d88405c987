#include "vohedge/hedging.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vohedge/bs_core.hpp"
#include "vohedge/errors.hpp"
#include "vohedge/smile_sabr.hpp"

namespace vohedge::hedge {

namespace {

void check_path(const sim::PathView& path, const OptionSpec& opt) {
  const std::size_t n = path.times.size();
  if (n < 2 || path.spot.size() != n || path.alpha.size() != n || path.level.size() != n)
    throw DomainError("hedge: inconsistent path arrays");
  if (std::abs(path.times.back() - opt.maturity) > 1e-9 * std::max(1.0, opt.maturity))
    throw DomainError("hedge: path horizon must equal option maturity");
}

MarketState node(const sim::PathView& path, std::size_t i) {
  return {path.times[i], path.spot[i], path.alpha[i], path.level[i]};
}

double payoff(const sim::PathView& path, const OptionSpec& opt) {
  return std::max(path.spot.back() - opt.strike, 0.0);
}

}  // namespace

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Delta: return "delta";
    case StrategyKind::HKLW: return "hklw";
    case StrategyKind::Bartlett: return "bartlett";
    case StrategyKind::AvoRough: return "avo";
    case StrategyKind::Custom: return "custom";
  }
  return "unknown";
}

StrategyKind strategy_from_string(std::string_view name) {
  if (name == "delta") return StrategyKind::Delta;
  if (name == "hklw") return StrategyKind::HKLW;
  if (name == "bartlett") return StrategyKind::Bartlett;
  if (name == "avo") return StrategyKind::AvoRough;
  throw ConfigError("unknown strategy '" + std::string(name) + "'");
}

bool applicable(StrategyKind kind, ModelKind model) {
  switch (kind) {
    case StrategyKind::Delta:
    case StrategyKind::Custom: return true;
    case StrategyKind::HKLW:
    case StrategyKind::Bartlett: return model == ModelKind::Sabr;
    case StrategyKind::AvoRough: return model == ModelKind::RoughBergomi;
  }
  return false;
}

StrategyEngine::StrategyEngine(const ModelParams& params, const OptionSpec& opt)
    : params_(params), opt_(opt) {
  if (!(opt.strike > 0.0) || !(opt.maturity > 0.0) || !(opt.spot > 0.0))
    throw DomainError("option: strike, maturity and spot must be positive");
  if (!(params.eta > 0.0)) throw DomainError("hedge: eta must be positive");
  if (!(std::abs(params.rho) <= kRhoGuard)) throw DomainError("hedge: |rho| must be <= 0.9999");
  if (params.kind == ModelKind::RoughBergomi) {
    if (!(params.hurst > 0.0 && params.hurst <= 0.5))
      throw DomainError("hedge: rough Bergomi requires hurst in (0, 1/2]");
    rough_smile_.emplace(rough::RoughSmileParams{params.rho, params.eta, params.hurst});
    leverage_scale_ = 1.0 / (params.hurst + 0.5);
  }
}

void StrategyEngine::require(StrategyKind kind) const {
  if (!applicable(kind, params_.kind))
    throw ConfigError("strategy '" + std::string(to_string(kind)) + "' is not defined for model '" +
                      std::string(vohedge::to_string(params_.kind)) + "'");
}

LocalTerms StrategyEngine::local(const MarketState& state) const {
  LocalTerms lt{};
  lt.tau = opt_.maturity - state.t;
  if (!(lt.tau > 0.0)) throw DomainError("hedge: state must satisfy t < T");
  lt.spot = state.spot;
  lt.alpha = state.alpha;
  const bool is_rough = rough_smile_.has_value();
  lt.kappa = is_rough ? rough::kernel(lt.tau, rough_smile_->params()) : params_.eta;

  smile::SmileDerivs d{1.0, 1.0, 0.0};
  if (state.level > 0.0 && state.alpha > 0.0) {
    lt.y = lt.kappa / state.level * std::log(opt_.strike / state.spot);
    d = is_rough ? (*rough_smile_)(lt.y) : sabr::smile_functions(lt.y, params_.rho);
    lt.sigma_hat = state.level * d.f;
  }
  lt.F1 = d.F1;
  lt.F2 = d.F2;

  const bs::Greeks g = bs::greeks({state.spot, opt_.strike, lt.sigma_hat, lt.tau});
  lt.delta = g.delta;
  lt.vega = g.vega;

  const double rho = params_.rho;
  const double a2 = state.alpha * state.alpha;
  const double lev = leverage_scale_ * d.F1;  // R_t U_t F1 / alpha with R = 1/(H+1/2), U = alpha
  lt.spot_var = state.spot * state.spot * a2;
  lt.cross = 0.5 * lt.kappa * a2 * state.spot * (rho * lev + d.F2);
  lt.vol_var = 0.25 * lt.kappa * lt.kappa * a2 * (lev * lev + 2.0 * rho * lev * d.F2 + d.F2 * d.F2);
  return lt;
}

double StrategyEngine::position(StrategyKind kind, const LocalTerms& lt) const {
  require(kind);
  // Vega/S = phi(d+) sqrt(tau); vanishes when the implied variance is zero.
  const double scaled_vega = lt.vega / lt.spot;
  const double lev = leverage_scale_ * lt.F1;
  switch (kind) {
    case StrategyKind::Delta: return lt.delta;
    case StrategyKind::HKLW: return lt.delta + 0.5 * params_.eta * scaled_vega * lt.F2;
    case StrategyKind::Bartlett:
    case StrategyKind::AvoRough:
      return lt.delta + 0.5 * lt.kappa * scaled_vega * (params_.rho * lev + lt.F2);
    case StrategyKind::Custom: break;
  }
  throw ConfigError("custom strategies need an explicit position series");
}

double StrategyEngine::analytic_integrand(StrategyKind kind, const LocalTerms& lt) const {
  require(kind);
  const double v2 = lt.vega * lt.vega;
  const double base =
      0.25 * lt.kappa * lt.kappa * lt.alpha * lt.alpha * leverage_scale_ * leverage_scale_ *
      lt.F1 * lt.F1;
  switch (kind) {
    case StrategyKind::Delta: return v2 * lt.vol_var;
    case StrategyKind::HKLW: return v2 * base;
    case StrategyKind::Bartlett:
    case StrategyKind::AvoRough: return v2 * (1.0 - params_.rho * params_.rho) * base;
    case StrategyKind::Custom: break;
  }
  throw ConfigError("custom strategies have no closed-form MSHE; use mshe_general");
}

double StrategyEngine::general_integrand(double theta, const LocalTerms& lt) const {
  const double excess = theta - lt.delta;
  return excess * excess * lt.spot_var - 2.0 * excess * lt.vega * lt.cross +
         lt.vega * lt.vega * lt.vol_var;
}

double StrategyEngine::reduction_integrand(const LocalTerms& lt) const {
  const double lev = leverage_scale_ * lt.F1;
  const double mix = params_.rho * lev + lt.F2;
  return 0.25 * lt.kappa * lt.kappa * lt.alpha * lt.alpha * lt.vega * lt.vega * mix * mix;
}

double position(StrategyKind kind, const MarketState& state, const OptionSpec& opt,
                const ModelParams& params) {
  return StrategyEngine(params, opt).position(kind, state);
}

std::vector<double> position_series(const sim::PathView& path, StrategyKind kind,
                                    const OptionSpec& opt, const ModelParams& params) {
  check_path(path, opt);
  const StrategyEngine engine(params, opt);
  std::vector<double> out(path.times.size() - 1);
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i)
    out[i] = engine.position(kind, node(path, i));
  return out;
}

PathOutcome evaluate_path(const sim::PathView& path, std::span<const StrategyKind> kinds,
                          const StrategyEngine& engine) {
  check_path(path, engine.option());
  for (StrategyKind k : kinds) engine.require(k);
  PathOutcome out;
  out.payoff = payoff(path, engine.option());
  out.gains.assign(kinds.size(), 0.0);
  out.analytic.assign(kinds.size(), 0.0);
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
    const LocalTerms lt = engine.local(node(path, i));
    const double dt = path.times[i + 1] - path.times[i];
    const double ds = path.spot[i + 1] - path.spot[i];
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      out.gains[k] += engine.position(kinds[k], lt) * ds;
      out.analytic[k] += engine.analytic_integrand(kinds[k], lt) * dt;
    }
  }
  for (std::size_t k = 0; k < kinds.size(); ++k)
    if (!std::isfinite(out.gains[k]) || !std::isfinite(out.analytic[k]))
      throw NumericError("hedge: non-finite accumulation");
  return out;
}

HedgeRecord hedge_path(const sim::PathView& path, StrategyKind kind, const OptionSpec& opt,
                       const ModelParams& params, double w, bool keep_positions) {
  check_path(path, opt);
  const StrategyEngine engine(params, opt);
  engine.require(kind);

  std::vector<StrategyKind> model_kinds;
  for (StrategyKind k : {StrategyKind::Delta, StrategyKind::HKLW, StrategyKind::Bartlett,
                         StrategyKind::AvoRough})
    if (applicable(k, params.kind)) model_kinds.push_back(k);

  HedgeRecord rec{kind, 0.0, w, {}, {}};
  double gains = 0.0;
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
    const LocalTerms lt = engine.local(node(path, i));
    const double dt = path.times[i + 1] - path.times[i];
    const double theta = engine.position(kind, lt);
    gains += theta * (path.spot[i + 1] - path.spot[i]);
    if (keep_positions) rec.positions.push_back(theta);
    for (StrategyKind k : model_kinds)
      rec.analytic_mshe_integrals[k] += engine.analytic_integrand(k, lt) * dt;
  }
  rec.terminal_error = payoff(path, opt) - w - gains;
  if (!std::isfinite(rec.terminal_error)) throw NumericError("hedge: non-finite terminal error");
  return rec;
}

double analytic_mshe(const sim::PathView& path, StrategyKind kind, const OptionSpec& opt,
                     const ModelParams& params) {
  check_path(path, opt);
  const StrategyEngine engine(params, opt);
  engine.require(kind);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i)
    acc += engine.analytic_integrand(kind, engine.local(node(path, i))) *
           (path.times[i + 1] - path.times[i]);
  return acc;
}

double mshe_general(const sim::PathView& path, std::span<const double> positions,
                    const OptionSpec& opt, const ModelParams& params) {
  check_path(path, opt);
  if (positions.size() + 1 != path.times.size())
    throw DomainError("mshe_general: position series length must equal n_steps");
  const StrategyEngine engine(params, opt);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i)
    acc += engine.general_integrand(positions[i], engine.local(node(path, i))) *
           (path.times[i + 1] - path.times[i]);
  return acc;
}

double mshe_reduction(const sim::PathView& path, const OptionSpec& opt, const ModelParams& params) {
  check_path(path, opt);
  const StrategyEngine engine(params, opt);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i)
    acc += engine.reduction_integrand(engine.local(node(path, i))) *
           (path.times[i + 1] - path.times[i]);
  return acc;
}

}  // namespace vohedge::hedge
