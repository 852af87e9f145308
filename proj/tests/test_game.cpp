#include "doctest.h"
#include "firefight/adversaries.hpp"
#include "firefight/cactus.hpp"
#include "firefight/errors.hpp"
#include "firefight/game.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace firefight;

TEST_CASE("new game") {
  const GameState s = new_game(test::instance(test::path(2), {1}));
  CHECK(s.round() == 1);
  CHECK(s.status(0) == VertexStatus::Burned);
  CHECK(s.status(1) == VertexStatus::Available);
  CHECK(s.trace().empty());
  CHECK(s.num_burned() == 1);

  const GameState t = new_game(test::instance(make_tadpole(10, 3), {1, 1}));
  CHECK(t.instance().num_vertices() == 14);
  CHECK(t.instance().num_vertices() - t.num_burned() == 13);
}

TEST_CASE("protect") {
  GameState s(test::instance(test::path(2), {1}));
  s.protect(1);
  CHECK(s.status(1) == VertexStatus::Protected);
  CHECK(s.trace() == Trace{{1, 1, 1}});
  CHECK_THROWS_AS(s.protect(2), Error);  // no firefighter left

  GameState u(test::instance(test::path(2), {2}));
  CHECK_THROWS_AS(u.protect(0), Error);
  u.protect(1);
  try {
    u.protect(1);
    FAIL("protected twice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexUnavailable);
  }
}

TEST_CASE("spread and termination") {
  GameState s(test::instance(test::path(2), {}));
  CHECK_FALSE(s.is_finished());
  CHECK_THROWS_AS(s.profit(), Error);
  s.spread();
  CHECK(s.burned() == VertexSet(3, {0, 1}));
  CHECK(s.round() == 2);

  GameState a(test::instance(test::path(2), {1}));
  a.protect(1);
  a.spread();
  CHECK(a.burned() == VertexSet(3, {0}));
  CHECK(a.is_finished());
  CHECK(a.profit() == 2);

  GameState c(test::instance(test::cycle(4), {}));
  c.spread();
  CHECK(c.burned() == VertexSet(5, {0, 1, 4}));
  while (!c.is_finished()) c.spread();
  CHECK(c.profit() == 0);
}

TEST_CASE("reduced view contracts the fire and drops saved vertices") {
  GameState fresh(test::instance(test::cycle(4), {1}));
  const auto v0 = fresh.reduced_view();
  CHECK(v0.graph == test::cycle(4));

  GameState p(test::instance(test::path(2), {}));
  p.spread();
  const auto pv = p.reduced_view();
  CHECK(pv.original == std::vector<Vertex>{0, 2});
  CHECK(pv.graph.num_edges() == 1);

  GameState c(test::instance(test::cycle(4), {}));
  c.spread();
  const auto cv = c.reduced_view();
  CHECK(cv.original == std::vector<Vertex>{0, 2, 3});
  CHECK(cv.graph.has_edge(0, 1));
  CHECK(cv.graph.has_edge(0, 2));
  CHECK(cv.graph.has_edge(1, 2));
  CHECK(validate_and_decompose(cv.graph).class_tag == GraphClass::OneAlmostTree);

  // Saved vertices disappear from the view.
  GameState s(test::instance(test::cycle(4, {{2, 5}}, 6), {2}));
  s.protect(1);
  s.protect(3);
  const auto sv = s.reduced_view();
  CHECK(sv.original == std::vector<Vertex>{0, 4});
}

TEST_CASE("replay") {
  CHECK(replay(test::instance(test::path(3), {}), {}).profit == 0);
  const auto tad = test::instance(make_tadpole(10, 3), {1});
  CHECK(replay(tad, {{1, 11}}).profit == 3);

  const auto tight = make_alge_tight(4);
  const auto w = replay(tight, alge_tight_witness(4));
  CHECK(w.profit == 34);
  CHECK(oracle::view_only_profit(tight, alge_tight_witness(4)) == 34);

  CHECK_THROWS_AS(replay(tad, {{1, 11}, {1, 12}}), Error);
  CHECK_THROWS_AS(replay(tad, {{0, 11}}), Error);
  CHECK_THROWS_AS(replay(test::instance(test::path(3), {1, 1}), {{1, 1}, {2, 1}}), Error);
  CHECK_THROWS_AS(replay(test::instance(test::path(3), {0, 1}), {{2, 1}}), Error);
}

TEST_CASE("the literal witness from the tightness write-up is not legal") {
  // a1 and b1 already save a5 and b5, so a second protection there is refused.
  const auto tight = make_alge_tight(4);
  const AlgeTightIds id{4};
  const ProtectionSchedule literal{{1, id.a(1)}, {1, id.b(1)}, {5, id.a(5)}, {5, id.b(5)}, {5, id.x(3)}, {5, id.y(3)}};
  CHECK_THROWS_AS(replay(tight, literal), Error);
}

TEST_CASE("profit equals the covered set of everything protected") {
  const auto inst = test::instance(test::cycle(6, {{2, 7}, {7, 8}}, 9), {1, 1});
  const ProtectionSchedule sched{{1, 1}, {2, 5}};
  const auto r = replay(inst, sched);
  CHECK(r.profit == weight(inst.graph, VertexSet(9, {1, 5})));
  CHECK(r.profit == oracle::view_only_profit(inst, sched));
}

TEST_CASE("firefighters do not carry over") {
  static_assert(!kFirefightersCarryOver);
  GameState s(test::instance(test::path(3), {1, 0}));
  s.spread();
  CHECK(s.firefighters_left() == 0);
}
