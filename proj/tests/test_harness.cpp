#include <cmath>
#include <sstream>

#include "doctest.h"
#include "firefight/adversaries.hpp"
#include "firefight/errors.hpp"
#include "firefight/harness.hpp"
#include "support.hpp"

using namespace firefight;

TEST_CASE("competitive bounds") {
  CHECK(competitive_bound(AlgorithmKind::GreedyTree, GraphClass::Tree, 10, {1}) == 2.0);
  CHECK(*competitive_bound(AlgorithmKind::AlgA, GraphClass::OneAlmostTree, 16, {1}) == doctest::Approx(25.0));
  CHECK(*competitive_bound(AlgorithmKind::AlgC, GraphClass::Cactus, 9, {1}) == doctest::Approx(46.0));
  CHECK(competitive_bound(AlgorithmKind::AlgE, GraphClass::Cactus, 9, {2, 0, 4}) == 3.0);
  CHECK_FALSE(competitive_bound(AlgorithmKind::AlgE, GraphClass::Cactus, 9, {2, 1}));
}

TEST_CASE("ratio report") {
  const auto r = ratio_report(Instance{make_tadpole(10, 3), {1}, "t"}, AlgorithmKind::AlgA);
  CHECK(r.opt_profit == 3);
  CHECK(r.alg_profit == 1);
  CHECK(r.ratio == 3.0);
  CHECK(r.bound_satisfied);

  // Nothing to protect: the ratio is 1 and any bound holds.
  const auto zero = ratio_report(test::instance(test::path(2), {}), AlgorithmKind::GreedyTree);
  CHECK(zero.opt_profit == 0);
  CHECK(zero.bound_satisfied);

  CHECK_THROWS_AS(ratio_report(Instance{make_tadpole(10, 3), {1}, ""}, AlgorithmKind::GreedyTree), Error);

  RatioReport inf;
  inf.instance = "x";
  inf.opt_profit = 2;
  inf.alg_profit = 0;
  inf.ratio = profit_ratio(2, 0);
  CHECK(to_json_line(inf).find("\"ratio\":\"inf\"") != std::string::npos);
  CHECK(to_json_line(r).find("runtime") == std::string::npos);
}

TEST_CASE("batches are reproducible") {
  BatchSpec spec;
  spec.kind = AlgorithmKind::AlgC;
  spec.trials = 25;
  spec.n_max = 10;
  spec.seed = 5;
  std::ostringstream a, b;
  const auto s = run_ratio_batch(spec, &a);
  run_ratio_batch(spec, &b);
  CHECK(a.str() == b.str());
  CHECK(s.violations == 0);
  CHECK(static_cast<int>(s.rows.size()) + s.skipped == 25);

  std::ostringstream table;
  write_table(table, s.rows);
  CHECK(table.str().find("alg-c") != std::string::npos);
}

TEST_CASE("random instances match the algorithm class") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(validate_and_decompose(random_instance_for(AlgorithmKind::GreedyTree, 12, seed).graph).class_tag ==
          GraphClass::Tree);
    CHECK(validate_and_decompose(random_instance_for(AlgorithmKind::AlgA, 12, seed).graph).class_tag ==
          GraphClass::OneAlmostTree);
    for (int f : random_instance_for(AlgorithmKind::AlgE, 12, seed).sequence) CHECK(f % 2 == 0);
  }
}
