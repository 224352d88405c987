#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vohedge/dynamics.hpp"
#include "vohedge/smile_rough.hpp"
#include "vohedge/types.hpp"

namespace vohedge::hedge {

enum class StrategyKind { Delta, HKLW, Bartlett, AvoRough, Custom };

std::string_view to_string(StrategyKind kind);
StrategyKind strategy_from_string(std::string_view name);
/// Bartlett and HKLW need the SABR smile, AvoRough the rough Bergomi one.
bool applicable(StrategyKind kind, ModelKind model);

struct MarketState {
  double t;
  double spot;
  double alpha;
  double level;  // alpha for SABR, U_t for rough Bergomi
};

/// Smile and Black-Scholes quantities at one grid node, together with the
/// within-approximation quadratic-variation densities (per unit time).
struct LocalTerms {
  double tau;
  double spot;
  double alpha;
  double y;
  double sigma_hat;
  double delta;
  double vega;
  double F1;
  double F2;
  double spot_var;   // d<S,S>/dt
  double cross;      // d<Sigma,S>/dt
  double vol_var;    // d<Sigma,Sigma>/dt
  double kappa;      // eta for SABR, kappa(T - t) for rough Bergomi
};

class StrategyEngine {
 public:
  StrategyEngine(const ModelParams& params, const OptionSpec& opt);

  LocalTerms local(const MarketState& state) const;
  double position(StrategyKind kind, const LocalTerms& terms) const;
  double position(StrategyKind kind, const MarketState& state) const {
    return position(kind, local(state));
  }
  /// Integrand of the analytic MSHE of a built-in strategy, per unit time.
  double analytic_integrand(StrategyKind kind, const LocalTerms& terms) const;
  /// Integrand of the general MSHE formula for an arbitrary position theta.
  double general_integrand(double theta, const LocalTerms& terms) const;
  /// Integrand of MSHE(Delta) - MSHE(variance-optimal).
  double reduction_integrand(const LocalTerms& terms) const;

  const ModelParams& params() const { return params_; }
  const OptionSpec& option() const { return opt_; }
  void require(StrategyKind kind) const;

 private:
  ModelParams params_;
  OptionSpec opt_;
  std::optional<rough::RoughSmile> rough_smile_;
  double leverage_scale_ = 1.0;  // 1/(H + 1/2) under the rough approximation
};

double position(StrategyKind kind, const MarketState& state, const OptionSpec& opt,
                const ModelParams& params);

struct HedgeRecord {
  StrategyKind kind;
  double terminal_error;
  double initial_capital;
  std::map<StrategyKind, double> analytic_mshe_integrals;
  std::vector<double> positions;
};

/// Rebalanced at every grid node t_0..t_{n-1}:
/// L_T = (S_T - K)^+ - w - sum theta_i (S_{i+1} - S_i).
HedgeRecord hedge_path(const sim::PathView& path, StrategyKind kind, const OptionSpec& opt,
                       const ModelParams& params, double w, bool keep_positions = false);

std::vector<double> position_series(const sim::PathView& path, StrategyKind kind,
                                    const OptionSpec& opt, const ModelParams& params);

/// Left-Riemann quadrature of the strategy's analytic MSHE integrand.
double analytic_mshe(const sim::PathView& path, StrategyKind kind, const OptionSpec& opt,
                     const ModelParams& params);

/// General MSHE quadrature for any position series on the grid.
double mshe_general(const sim::PathView& path, std::span<const double> positions,
                    const OptionSpec& opt, const ModelParams& params);

/// Quadrature of MSHE(Delta) - MSHE(variance-optimal).
double mshe_reduction(const sim::PathView& path, const OptionSpec& opt, const ModelParams& params);

/// Payoff, hedge gains and analytic integrals for several strategies in one pass.
struct PathOutcome {
  double payoff = 0.0;
  std::vector<double> gains;
  std::vector<double> analytic;
};

PathOutcome evaluate_path(const sim::PathView& path, std::span<const StrategyKind> kinds,
                          const StrategyEngine& engine);

}  // namespace vohedge::hedge
