#include "doctest.h"
#include "firefight/errors.hpp"
#include "lemmas.hpp"

using namespace firefight;

TEST_CASE("every suite passes a short run") {
  const auto names = suite_names();
  CHECK(names.size() == 19);
  for (const auto& name : names) {
    SuiteOptions o;
    o.trials = 40;
    o.seed = 3;
    o.n_max = 10;
    const auto r = run_suite(name, o);
    CAPTURE(name);
    CHECK(r.passed());
    CHECK(r.trials == 40);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("suites are deterministic") {
  SuiteOptions o;
  o.trials = 30;
  const auto a = run_suite("view-vs-status", o);
  const auto b = run_suite("view-vs-status", o);
  CHECK(a.checks == b.checks);
  CHECK(a.skipped == b.skipped);
}

TEST_CASE("unknown suite") {
  try {
    run_suite("no-such-suite", {});
    FAIL("expected UnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
}
