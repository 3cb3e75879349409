#include "vilenkin/random.hpp"

namespace vilenkin {

namespace {

template <class Values>
void fill_unit(Values values, GridRng& rng) {
  double sup = 0.0;
  for (auto& v : values) {
    const double re = rng.symmetric();
    v = {re, rng.symmetric()};
    sup = std::max(sup, std::abs(v));
  }
  if (sup > 0.0)
    for (auto& v : values) v /= sup;
}

}  // namespace

CylinderGrid1D random_grid_1d(const ModulusSequence& ms, std::size_t depth, GridRng& rng) {
  CylinderGrid1D out(ms, depth);
  fill_unit(out.values(), rng);
  return out;
}

CylinderGrid2D random_grid_2d(const ModulusSequence& ms, std::size_t depth, GridRng& rng) {
  CylinderGrid2D out(ms, depth);
  fill_unit(out.values(), rng);
  return out;
}

CylinderGrid1D smooth_grid_1d(const ModulusSequence& ms, std::size_t depth, GridRng& rng) {
  return random_grid_1d(ms, depth >= 2 ? depth - 2 : 0, rng).refined(depth);
}

CylinderGrid2D smooth_grid_2d(const ModulusSequence& ms, std::size_t depth, GridRng& rng) {
  return random_grid_2d(ms, depth >= 2 ? depth - 2 : 0, rng).refined(depth);
}

}  // namespace vilenkin
