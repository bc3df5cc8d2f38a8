#pragma once

// Seeded randomness with a portable mapping to ranges (std distributions are
// implementation-defined, which would make reports differ across toolchains).

#include <cstdint>
#include <random>

#include "qsc/arith.hpp"

namespace qsc {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, bound), bound > 0; rejection sampling avoids modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  /// u/v with 1 <= |u| <= 9, 1 <= v <= 9, reduced.
  BigRat small_rational() {
    long u = range(1, 9);
    if (below(2)) u = -u;
    return make_rat(u, range(1, 9));
  }

 private:
  std::mt19937_64 eng_;
};

/// Mixes a base seed with a label so sub-streams stay independent and stable.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace qsc
