#pragma once

#include <cstdint>
#include <random>

namespace algdil {

/// Seeded source of integers. The engine is std::mt19937_64 (fully specified
/// by the C++ standard); bounded draws use rejection on the raw 64-bit output
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined. Same seed, same sequence, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace algdil
