#include "vohedge/types.hpp"

#include <algorithm>
#include <cmath>

#include "vohedge/errors.hpp"

namespace vohedge {

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::Sabr ? "sabr" : "rough";
}

ForwardCurve ForwardCurve::flat(double variance, double t0, double t1) {
  return {{t0, t1}, {variance, variance}};
}

void ForwardCurve::validate() const {
  if (times.size() < 2 || times.size() != values.size())
    throw DomainError("forward curve needs >= 2 nodes with matching values");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]))
      throw DomainError("forward curve values must be positive");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw DomainError("forward curve times must be increasing");
  }
}

double ForwardCurve::at(double s) const {
  if (s <= times.front()) return values.front();
  if (s >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), s);
  const std::size_t hi = static_cast<std::size_t>(it - times.begin());
  const std::size_t lo = hi - 1;
  const double w = (s - times[lo]) / (times[hi] - times[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

void ModelParams::validate() const {
  if (!(eta > 0.0)) throw DomainError("model: eta must be positive");
  if (!(alpha0 > 0.0)) throw DomainError("model: alpha0 must be positive");
  if (!(spot0 > 0.0)) throw DomainError("model: spot0 must be positive");
  if (!(std::abs(rho) <= kRhoGuard)) throw DomainError("model: |rho| must be <= 0.9999");
  if (kind == ModelKind::RoughBergomi) {
    if (!(hurst > 0.0 && hurst <= 0.5))
      throw DomainError("model: rough simulation requires hurst in (0, 1/2]");
    if (initial_curve) initial_curve->validate();
  }
}

}  // namespace vohedge
