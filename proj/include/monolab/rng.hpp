#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <initializer_list>

namespace monolab {

// Counter-friendly 64-bit generator (splitmix64). Every stream is a pure
// function of its seed, so parallel workers derive independent streams
// instead of sharing a generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0,1); never returns 0, so it is safe under log().
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Hand-rolled so streams are
  // bit-reproducible across platforms and standard libraries.
  std::array<double, 2> next_normal_pair() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  std::complex<double> next_complex_normal() {
    const auto [x, y] = next_normal_pair();
    return {x, y};
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_u64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  SplitMix64 s(h);
  return s.next_u64();
}

// Seed derivation for sub-streams: hash(master, idx0, idx1, ...).
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> idx) {
  std::uint64_t h = master;
  for (std::uint64_t v : idx) h = mix_u64(h, v);
  return h;
}

// FNV-1a over raw bytes; used for compact state identities in reports.
inline std::uint64_t fnv1a_bytes(const void* data, std::size_t n,
                                 std::uint64_t h = 1469598103934665603ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace monolab
