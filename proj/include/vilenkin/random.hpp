#pragma once

// Seeded test functions. Every draw goes through std::mt19937_64 and an
// explicit bits-to-double map, so a seed gives the same grid on every
// platform.

#include <cstdint>
#include <random>

#include "vilenkin/summability.hpp"

namespace vilenkin {

class GridRng {
public:
  explicit GridRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

private:
  std::mt19937_64 engine_;
};

/// Independent entries with real and imaginary parts uniform in [-1, 1],
/// scaled to unit sup norm.
CylinderGrid1D random_grid_1d(const ModulusSequence& ms, std::size_t depth, GridRng& rng);
CylinderGrid2D random_grid_2d(const ModulusSequence& ms, std::size_t depth, GridRng& rng);

/// A random grid at depth - 2 (or 0) refined to `depth`.
CylinderGrid1D smooth_grid_1d(const ModulusSequence& ms, std::size_t depth, GridRng& rng);
CylinderGrid2D smooth_grid_2d(const ModulusSequence& ms, std::size_t depth, GridRng& rng);

}  // namespace vilenkin
