#pragma once

#include <cstdint>

#include "ckf/linalg.hpp"

namespace ckf {

// Tiny deterministic generator (splitmix64). The standard <random>
// distributions are not bit-stable across library implementations and the
// harness reports are required to be reproducible from a seed alone.
class Prng {
public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4ecd9aeb996b3ULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; bias is irrelevant at these ranges.
  std::int64_t in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Rational with |numerator| <= max_abs, denominator in [1, max_den].
  Rat rat(std::int64_t max_abs = 20, std::int64_t max_den = 20) {
    return Rat(in(-max_abs, max_abs), in(1, max_den));
  }

  // Nonzero rational vector of the given dimension.
  QVec nonzero_vec(int dim) {
    for (;;) {
      QVec v(static_cast<size_t>(dim));
      for (auto& x : v) x = rat();
      if (!vzero(v)) return v;
    }
  }

private:
  std::uint64_t state_;
};

}  // namespace ckf
