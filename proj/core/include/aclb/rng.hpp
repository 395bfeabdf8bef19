#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace aclb {

/// FNV-1a 64-bit hash. Used for seed derivation and config digests so that
/// results do not depend on std::hash, which varies between standard
/// libraries.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Derives an independent stream seed from a base seed and a purpose tag.
/// Every module that needs randomness derives its own stream this way, so a
/// single 64-bit run seed determines the whole pipeline.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t z = base ^ fnv1a64(tag);
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic RNG. Wraps std::mt19937_64 (whose output sequence is fixed
/// by the standard) but implements the real/int mappings by hand: the
/// distribution classes are implementation-defined and would break bitwise
/// reproducibility across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aclb
