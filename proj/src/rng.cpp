#include "vohedge/rng.hpp"

#include <cmath>
#include <numbers>

#include "vohedge/errors.hpp"

namespace vohedge::sim {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

// Uniform in (0, 1) with 53 random bits.
inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi >> 5) << 26) | (lo >> 6);
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

std::array<double, 2> standard_normals(const RngStream& rng, std::uint64_t step) {
  const PhiloxCounter ctr{static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32),
                          static_cast<std::uint32_t>(rng.path_index),
                          static_cast<std::uint32_t>(rng.path_index >> 32)};
  const PhiloxKey key{static_cast<std::uint32_t>(rng.seed),
                      static_cast<std::uint32_t>(rng.seed >> 32)};
  const PhiloxCounter bits = philox4x32_10(ctr, key);
  const double u1 = to_unit(bits[0], bits[1]);
  const double u2 = to_unit(bits[2], bits[3]);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::vector<NormalPair> correlated_normals(const RngStream& rng, std::size_t n, double rho) {
  if (!(std::abs(rho) <= 1.0)) throw DomainError("correlated_normals: |rho| must be <= 1");
  const double ortho = std::sqrt(1.0 - rho * rho);
  std::vector<NormalPair> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto z = standard_normals(rng, i);
    out[i] = {z[0], rho * z[0] + ortho * z[1]};
  }
  return out;
}

}  // namespace vohedge::sim
