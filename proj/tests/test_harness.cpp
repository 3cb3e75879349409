#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vilenkin/experiments.hpp"

using namespace vilenkin;

namespace {

ExperimentConfig small(const std::string& name) {
  ExperimentConfig c;
  c.experiment = name;
  if (name == "strong-means") {
    c.modulus = "2^5";
  } else if (name == "fridli-schipp") {
    c.modulus = "2^8";
  } else if (name == "counterexample") {
    c.modulus = "[2,3]^7";
    c.gauge = "pow:A=100,alpha=3";
  } else if (name == "lemma-glukhov") {
    c.modulus = "2^4";
    c.scales = {0, 1, 2};
  } else {
    c.modulus = "2,3,2";
  }
  c.trials = 3;
  c.seed = 17;
  return c;
}

}  // namespace

TEST_CASE("every experiment passes on a small configuration and is deterministic") {
  for (const auto& name : experiment_names()) {
    CAPTURE(name);
    const auto a = run_experiment(small(name));
    for (const auto& check : a.checks) {
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.passed);
    }
    CHECK_FALSE(a.checks.empty());
    CHECK_FALSE(a.table.rows().empty());
    const auto b = run_experiment(small(name));
    CHECK(a.table.str() == b.table.str());
  }
}

TEST_CASE("seeds change random experiments") {
  auto c = small("transform");
  const auto a = run_experiment(c);
  c.seed = 18;
  CHECK(run_experiment(c).table.str() != a.table.str());
}

TEST_CASE("strong-means table layout") {
  const auto r = run_experiment(small("strong-means"));
  CHECK(r.table.header() == std::vector<std::string>{"n", "m", "gauge", "value", "overflowed"});
  // Ladder sweep at depth 5: six points per axis.
  CHECK(r.table.rows().size() == 36);
  CHECK(r.table.rows()[0][2] == "exp-sqrt:A=1");
}

TEST_CASE("counterexample reduces the block count and records it") {
  auto c = small("counterexample");
  c.modulus = "[2,3]^5";
  c.blocks = 2;
  const auto r = run_experiment(c);
  CHECK(r.table.rows().size() == 1);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("J = 1 instead of 2") != std::string::npos;
  CHECK(noted);

  c.modulus = "[2,3]^24";
  c.gauge = "pow:1.5";
  CHECK_THROWS_AS(run_experiment(c), BudgetExceeded);
}

TEST_CASE("configuration errors") {
  auto c = small("kernels");
  c.experiment = "nope";
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
  c = small("kernels");
  c.depth = 9;
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
  c = small("kernels");
  c.modulus = "2^20";
  c.depth = 20;
  CHECK_THROWS_AS(run_experiment(c), BudgetExceeded);
  c = small("lemma3");
  c.p = {0.0};
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
  c = small("strong-means");
  c.gauge = "bogus";
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
}

TEST_CASE("sweep parsing") {
  const auto ms = ModulusSequence::parse("2,3,2");
  CHECK(parse_sweep("dyadic", ms, 3) == std::vector<Index>{1, 2, 6, 12});
  CHECK(parse_sweep("ladder", ms, 2) == std::vector<Index>{1, 2, 6});
  CHECK(parse_sweep("diag", ms, 2) == std::vector<Index>{1, 2, 3, 4, 5, 6});
  CHECK(parse_sweep("5,2,5", ms, 3) == std::vector<Index>{2, 5});
  CHECK_THROWS_AS(parse_sweep("0", ms, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep("13", ms, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep("2,x", ms, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep("2,", ms, 3), std::invalid_argument);
}
