#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

// Counter-based normal variates: the draw for (seed, path, step) does not
// depend on the order in which paths or steps are generated.

namespace vohedge::sim {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11).
PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;
};

/// Two independent standard normals for one time step (Box-Muller on two
/// 53-bit uniforms drawn from a single Philox block).
std::array<double, 2> standard_normals(const RngStream& rng, std::uint64_t step);

/// Unit-variance pair with corr(dw, db) = rho.
struct NormalPair {
  double dw;
  double db;
};

std::vector<NormalPair> correlated_normals(const RngStream& rng, std::size_t n, double rho);

}  // namespace vohedge::sim
