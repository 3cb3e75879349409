#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "vilenkin/approximation.hpp"

using namespace vilenkin;

TEST_CASE("surrogates: single modes") {
  const auto ms = ModulusSequence::parse("2,3,2");
  const CylinderGrid1D one(ms, 3, std::vector<Complex>(12, 1.0));
  const auto xmode = CylinderGrid2D::tensor(sample_character(ms, 3, ms.scale(1)), one);
  CHECK(block_approx_surrogate(xmode, 1, 0) == doctest::Approx(1.0));
  CHECK(block_approx_surrogate(xmode, 1, 3) == doctest::Approx(1.0));
  CHECK(block_approx_surrogate(xmode, 2, 1) < 1e-12);
  CHECK(marginal_approx_surrogate_1(xmode, 1) == doctest::Approx(1.0));
  CHECK(marginal_approx_surrogate_1(xmode, 2) < 1e-12);
  CHECK(marginal_approx_surrogate_2(xmode, 1) < 1e-12);
  CHECK_THROWS_AS(block_approx_surrogate(xmode, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(marginal_approx_surrogate_2(xmode, 4), std::out_of_range);
}

TEST_CASE("approximation report invariants on random grids") {
  gen::for_all(51, 20, [](gen::Gen& g) {
    const auto ms = g.moduli(4, 64, 6);
    const auto f = random_grid_2d(ms, ms.depth(), g.grids());
    const auto rep = approx_report(f);
    REQUIRE(rep.scales() == ms.depth() + 1);
    REQUIRE(rep.first.back() < 1e-10);
    REQUIRE(rep.second.back() < 1e-10);
    REQUIRE(rep.block.back() < 1e-10);
    for (std::size_t L = 0; L + 1 < rep.scales(); ++L) {
      REQUIRE(rep.first[L + 1] <= 2.0 * rep.first[L] + 1e-12);
      REQUIRE(rep.second[L + 1] <= 2.0 * rep.second[L] + 1e-12);
      REQUIRE(rep.block[L + 1] <= 2.0 * rep.block[L] + 1e-12);
    }
    for (std::size_t L = 0; L <= ms.depth(); ++L)
      for (std::size_t R = 0; R <= ms.depth(); ++R) {
        const double block = block_approx_surrogate(f, L, R);
        REQUIRE(block <= 2.0 * (marginal_approx_surrogate_1(f, L) + marginal_approx_surrogate_2(f, R)) + 1e-10);
      }
  });
}

TEST_CASE("staircase") {
  const auto ms = ModulusSequence::parse("2,3,2");
  const std::vector<double> ladder = {4.0, 3.0, 2.0, 0.0};
  CHECK(staircase(ladder, ms, 1) == 4.0);
  CHECK(staircase(ladder, ms, 2) == 3.0);
  CHECK(staircase(ladder, ms, 5) == 3.0);
  CHECK(staircase(ladder, ms, 6) == 2.0);
  CHECK(staircase(ladder, ms, 11) == 2.0);
  CHECK(staircase(ladder, ms, 12) == 0.0);
  CHECK(staircase(ladder, ms, 100) == 0.0);
  CHECK_THROWS_AS(staircase({}, ms, 1), std::invalid_argument);
}

TEST_CASE("theorem1 right-hand side") {
  const auto ms = ModulusSequence::parse("2,3,2");
  ApproxReport rep;
  rep.first = {4.0, 1.0, 0.25, 0.0};
  rep.second = {9.0, 4.0, 1.0, 0.0};
  rep.block = {0.0, 0.0, 0.0, 0.0};
  // l = 1..3: sqrt(4), sqrt(1), sqrt(1); r = 1..2: sqrt(9), sqrt(4).
  CHECK(theorem1_rhs(rep, ms, 3, 2, 1.0) == doctest::Approx(4.0 / 3.0 + 5.0 / 2.0));
  CHECK(theorem1_rhs(rep, ms, 3, 2, 2.0) == doctest::Approx(2.0 * (4.0 / 3.0 + 5.0 / 2.0)));
  CHECK(approximation_power_average(rep, ms, 3, 2, 1.0) == doctest::Approx(6.0 / 3.0 + 13.0 / 2.0));
  CHECK_THROWS_AS(theorem1_rhs(rep, ms, 0, 1, 1.0), std::out_of_range);

  const CylinderGrid2D constant(ms, 3, std::vector<Complex>(144, Complex(1.0, -2.0)));
  CHECK(theorem1_rhs(constant, 12, 12, 1.0) < 1e-6);
}

TEST_CASE("approximation chain holds cellwise") {
  gen::for_all(52, 5, [](gen::Gen& g) {
    const auto ms = ModulusSequence::parse("2,3,2");
    const auto f = random_grid_2d(ms, 3, g.grids());
    for (Index l = 1; l <= 12; ++l)
      for (Index r = 1; r <= 12; ++r) {
        std::size_t L = 0;
        while (L < 3 && ms.scale(L + 1) <= l) ++L;
        std::size_t R = 0;
        while (R < 3 && ms.scale(R + 1) <= r) ++R;
        const auto T = rect_partial_sum(f, ms.scale(L), ms.scale(R));
        std::vector<Complex> resid(f.values().begin(), f.values().end());
        for (std::size_t c = 0; c < resid.size(); ++c) resid[c] -= T.values()[c];
        const CylinderGrid2D g2(ms, 3, resid);
        const double E = g2.sup_norm();
        const auto lhs = rect_partial_sum(f, l, r);
        const auto mid = rect_partial_sum(g2, l, r);
        for (std::size_t c = 0; c < resid.size(); ++c)
          REQUIRE(std::abs(lhs.values()[c] - f.values()[c]) <= std::abs(mid.values()[c]) + 2.0 * E + 1e-10);
      }
  });
}

TEST_CASE("report CSV") {
  const auto ms = ModulusSequence::parse("2,2");
  GridRng rng(1);
  const auto t = to_csv(approx_report(random_grid_2d(ms, 2, rng)));
  CHECK(t.header() == std::vector<std::string>{"scale", "E1", "E2", "Eblock"});
  CHECK(t.rows().size() == 3);
}
