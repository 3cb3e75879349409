#pragma once

// Hand-rolled generators for property tests. Each trial gets its own seed,
// which is captured so a failure names the case to replay.

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/random.hpp"

namespace gen {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : engine_(seed), grid_rng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }

  /// Moduli in [2, max_m] until M_K would exceed max_order; at least one.
  vilenkin::ModulusSequence moduli(std::uint32_t max_m, std::uint64_t max_order, std::size_t max_depth = 64) {
    std::vector<std::uint32_t> m;
    std::uint64_t order = 1;
    const std::size_t depth = between(1, max_depth);
    while (m.size() < depth) {
      const auto next = static_cast<std::uint32_t>(between(2, max_m));
      if (order * next > max_order) break;
      order *= next;
      m.push_back(next);
    }
    if (m.empty()) m.push_back(2);
    return vilenkin::ModulusSequence(m);
  }

  vilenkin::GroupPoint point(const vilenkin::ModulusSequence& ms) {
    std::vector<std::uint32_t> digits(ms.depth());
    for (std::size_t k = 0; k < ms.depth(); ++k) digits[k] = static_cast<std::uint32_t>(below(ms.modulus(k)));
    return vilenkin::GroupPoint(ms, digits);
  }

  vilenkin::GridRng& grids() { return grid_rng_; }

private:
  std::mt19937_64 engine_;
  vilenkin::GridRng grid_rng_;
};

/// Runs `body(gen)` for `trials` seeds derived from `base`.
template <class Body>
void for_all(std::uint64_t base, int trials, Body body) {
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base * 1000003ull + static_cast<std::uint64_t>(t);
    CAPTURE(seed);
    Gen g(seed);
    body(g);
  }
}

}  // namespace gen
