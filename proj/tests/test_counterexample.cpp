#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vilenkin/counterexample.hpp"
#include "vilenkin/reference/oracles.hpp"

using namespace vilenkin;

namespace {

// Desk configuration: a = 3, psi(u) = 100 u^3, c' = 1.
//   j = 1: threshold 5 ln 3 ~ 5.49, B_1 = 1 (100 > 5.49), A_1 = 1 + 1 = 2,
//          N_{A_1} = floor(m_2/2) M_2 = 6.
//   j = 2: B_2 >= 3, threshold ~ 10.99, 900 passes, A_2 = 6 + 1 = 7,
//          N_{A_2} = sum_{k=2}^{6} M_{2k} = 36 + 216 + 1296 + 7776 + 46656 = 55980.
CounterexampleParams desk() {
  return choose_params(ModulusSequence::parse("[2,3]^7"), GaugeFunction::parse("pow:A=100,alpha=3"), 1.0,
                       2, 14);
}

}  // namespace

TEST_CASE("parameter ladder, frozen desk values") {
  const auto p = desk();
  CHECK(p.blocks() == 2);
  CHECK(p.B == std::vector<Index>{0, 1, 3});
  CHECK(p.A == std::vector<std::size_t>{1, 2, 7});
  CHECK(p.N == std::vector<Index>{0, 6, 55980});
  CHECK(p.depth() == 14);
  CHECK(check_params(p).ok());

  // m = 2: a = 2 lowers the thresholds but not B; N_{A_2} = 16 + 64 + ... + 4096.
  const auto w = choose_params(ModulusSequence::parse("2^14"), GaugeFunction::parse("pow:A=100,alpha=3"), 1.0, 2, 14);
  CHECK(w.A == std::vector<std::size_t>{1, 2, 7});
  CHECK(w.N == std::vector<Index>{0, 4, 5456});
}

TEST_CASE("parameter ladder: refusals") {
  // psi(u) = u^{3/2}, c' = 1: sqrt(B) > 5 ln 3 forces B_1 = 31 and depth 64.
  const auto ms = ModulusSequence::parse("[2,3]^24");
  try {
    (void)choose_params(ms, GaugeFunction::parse("pow:1.5"), 1.0, 1, 48);
    FAIL("expected a budget refusal");
  } catch (const BudgetExceeded& e) {
    const std::string what = e.what();
    CHECK(what.find("2A_1 = 64") != std::string::npos);
    CHECK(what.find("B_1 = 31") != std::string::npos);
  }
  CHECK_THROWS_AS(choose_params(ms, GaugeFunction::parse("pow:1"), 1.0, 1, 48), std::invalid_argument);
  CHECK_THROWS_AS(choose_params(ms, GaugeFunction::exp_sqrt(1.0), 1.0, 1, 48), std::invalid_argument);
  CHECK_THROWS_AS(choose_params(ms, GaugeFunction::parse("pow:2"), 0.0, 1, 48), std::invalid_argument);
}

TEST_CASE("parameter checks catch violations") {
  auto p = desk();
  p.B[2] = 2;
  CHECK_FALSE(check_params(p).doubling);
  p = desk();
  p.A[2] = 2;
  CHECK_FALSE(check_params(p).increasing);
  p = desk();
  p.N[2] = ~Index{0};
  CHECK_FALSE(check_params(p).scale_bound);
  p = desk();
  p.c_prime = 1e-6;
  CHECK_FALSE(check_params(p).ratio);
}

TEST_CASE("block supports sit on the shells") {
  const auto p = desk();
  const auto& ms = p.ms;
  for (std::size_t j = 1; j <= 2; ++j) {
    const auto cells = block_support(p, j, 14);
    Index expected = 0;
    for (std::size_t s = p.A[j - 1]; s < p.A[j]; ++s) expected += ms.scale(14) / ms.scale(2 * s + 1);
    CHECK(cells.size() == expected);
    for (Index c : cells) {
      const auto digits = decompose_index(c, ms).digits;
      std::size_t lead = 0;
      while (digits[lead] == 0) ++lead;
      REQUIRE(lead % 2 == 0);
      REQUIRE(lead / 2 >= p.A[j - 1]);
      REQUIRE(lead / 2 < p.A[j]);
      REQUIRE(digits[lead] == ms.modulus(lead) - 1);
    }
  }
  CHECK_THROWS_AS(block_support(p, 3, 14), std::out_of_range);
  CHECK_THROWS_AS(block_support(p, 2, 13), std::out_of_range);
}

TEST_CASE("blocks: amplitude, phase alignment and kernel constants") {
  const Counterexample ce(desk());
  const auto& p = ce.params();
  for (std::size_t j = 1; j <= 2; ++j) {
    const auto& block = ce.blocks()[j - 1];
    CHECK(block.grid.depth() == 2 * p.A[j]);
    CHECK(block.grid.sup_norm() <= 1.0 / static_cast<double>(j + 1) + 1e-15);
    CHECK(ce.phase_alignment_error(j) <= 1e-10);
    CHECK(ce.kernel_lower_constant(j) > 0.1);
  }
  CHECK(ce.f().depth() == 14);
}

TEST_CASE("J decomposition") {
  const Counterexample ce(desk());
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto jd = ce.j_decomposition(k);
    CHECK(jd.J3 == 0.0);
    CHECK(jd.J2 <= ce.j2_bound(k) * (1 + 1e-12));
    const double s = std::abs(ce.partial_sum_at_zero(k));
    CHECK(s >= jd.J1 - jd.J2 - jd.J3 - 1e-12);
    CHECK(s <= jd.J1 + jd.J2 + jd.J3 + 1e-12);
  }
  // No later blocks exist past the last one.
  CHECK(ce.j_decomposition(2).J2 == 0.0);
  CHECK(ce.j2_bound(2) == 0.0);
  const auto free_jd = j_decomposition(desk(), 1);
  CHECK(free_jd.J1 == doctest::Approx(ce.j_decomposition(1).J1));
}

TEST_CASE("kernel on the support agrees with the literal sum") {
  const auto p = choose_params(ModulusSequence::parse("[2,3]^2"), GaugeFunction::parse("pow:A=100,alpha=3"), 1.0,
                               1, 4);
  REQUIRE(p.N[1] == 6);
  const auto literal = reference::dirichlet_literal(p.ms, 4, p.N[1]);
  const RootTable roots(p.ms);
  for (Index c : block_support(p, 1, 4)) {
    REQUIRE(std::abs(dirichlet_on_cell(p.ms, roots, 4, p.N[1], c) - literal[c]) < 1e-10);
  }
}

TEST_CASE("tensor identity") {
  const auto p = choose_params(ModulusSequence::parse("[2,3]^2"), GaugeFunction::parse("pow:A=100,alpha=3"), 1.0,
                               1, 4);
  const Counterexample ce(p);
  const auto F = build_F(p);
  REQUIRE(F.side() == 36);
  const Index N = ce.kernel_index(1);
  const Complex s = ce.partial_sum_at_zero(1);
  const Complex s2 = rect_partial_sum(F, N, N)(0, 0);
  CHECK(std::abs(s2 - s * s) < 1e-12);
  // Spot-check other index pairs too.
  const auto spec = forward_transform(ce.f());
  for (Index i : {1, 4, 17})
    for (Index j : {2, 36}) {
      const Complex lhs = rect_partial_sum(F, i, j)(0, 0);
      REQUIRE(std::abs(lhs - partial_sum_at_zero(spec, i) * partial_sum_at_zero(spec, j)) < 1e-12);
    }
}

TEST_CASE("divergence diagnostic") {
  const auto p = desk();
  const Counterexample ce(p);
  const auto d1 = ce.divergence_diagnostic(1);
  const auto d2 = ce.divergence_diagnostic(2);
  CHECK_FALSE(d1.overflowed);
  CHECK(d2.log_value > d1.log_value);
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto d = ce.divergence_diagnostic(k);
    const double expected = p.psi(d.partial_sum_abs) - 2.0 * std::log(static_cast<double>(p.N[k]));
    CHECK(d.log_value == doctest::Approx(expected));
  }
  const auto full = ce.full_log_mean(1);
  REQUIRE(full.has_value());
  CHECK(*full >= d1.log_value);
  CHECK_FALSE(ce.full_log_mean(2).has_value());
  CHECK(divergence_diagnostic(p, 2).log_value == doctest::Approx(d2.log_value));

  // Enormous gauges overflow into the sentinel.
  const auto big = choose_params(ModulusSequence::parse("[2,3]^7"), GaugeFunction::parse("expm1:A=1e4"), 1.0,
                                 1, 14);
  const auto od = Counterexample(big).divergence_diagnostic(1);
  CHECK(od.overflowed);
  CHECK(std::isinf(od.log_value));
}

TEST_CASE("report") {
  const auto table = Counterexample(desk()).report();
  CHECK(table.header() ==
        std::vector<std::string>{"k", "A_k", "N_A_k", "J1", "J2", "J3", "abs_S", "B_k", "diagnostic_log"});
  REQUIRE(table.rows().size() == 2);
  CHECK(table.rows()[1][2] == "55980");
  CHECK(table.rows()[0][5] == "0");
}
