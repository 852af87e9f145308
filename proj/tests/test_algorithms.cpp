#include "doctest.h"
#include "firefight/adversaries.hpp"
#include "firefight/algorithms.hpp"
#include "firefight/errors.hpp"
#include "support.hpp"

using namespace firefight;

namespace {

Subgraph whole(const Graph& g) { return induced_subgraph(g, VertexSet::full(g.num_vertices())); }

std::vector<Vertex> vertices(const RoundOutcome& out) {
  std::vector<Vertex> vs;
  for (const auto& p : out.placements) vs.push_back(p.vertex);
  return vs;
}

// Root cycles of weight 9 (0..8, pendant 9 on 4) and 7 (0,10..15, pendant 16 on 12).
Graph two_root_cycles() {
  std::vector<Edge> e;
  for (int i = 0; i < 8; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(8, 0);
  e.emplace_back(4, 9);
  e.emplace_back(0, 10);
  for (int i = 10; i < 15; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(15, 0);
  e.emplace_back(12, 16);
  return Graph(17, e, 0);
}

}  // namespace

TEST_CASE("names round-trip") {
  for (auto kind : {AlgorithmKind::GreedyTree, AlgorithmKind::AlgA, AlgorithmKind::AlgC, AlgorithmKind::AlgE}) {
    CHECK(parse_algorithm(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_algorithm("alg-z").has_value());
  CHECK(ceil_sqrt(10) == 4);
  CHECK(ceil_sqrt(9) == 3);
  CHECK(ceil_sqrt(1) == 1);
  CHECK(at_least_sqrt(3, SqrtOf{9}));
  CHECK_FALSE(at_least_sqrt(3, SqrtOf{10}));
}

TEST_CASE("greedy on trees") {
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 0);
  CHECK(vertices(greedy_tree_round(whole(star), 1)) == std::vector<Vertex>{1});

  const Graph t(8, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 6}, {6, 7}}, 0);
  CHECK(vertices(greedy_tree_round(whole(t), 1)) == std::vector<Vertex>{1});
  const auto both = greedy_tree_round(whole(t), 2);
  CHECK(vertices(both) == std::vector<Vertex>{1, 6});
  CHECK(both.placements[0].gain == 5);
  CHECK(both.placements[1].gain == 2);

  try {
    greedy_tree_round(whole(test::cycle(3)), 1);
    FAIL("expected NotATree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotATree);
  }
}

TEST_CASE("alg-a round decisions") {
  const Graph tad = make_tadpole(10, 3);
  const auto out = alg_a_round(whole(tad), validate_and_decompose(tad), 1);
  REQUIRE(out.placements.size() == 1);
  CHECK(out.placements[0].reason == PlacementReason::BreakCycle);
  CHECK(out.placements[0].vertex == 1);
  CHECK(out.breaks.size() == 1);

  // Cycle weight 4, path neighbour of weight 3.
  const Graph g = test::cycle(4, {{0, 5}, {5, 6}, {6, 7}}, 8);
  const auto two = alg_a_round(whole(g), validate_and_decompose(g), 2);
  REQUIRE(two.placements.size() == 2);
  CHECK(two.placements[0].vertex == 5);
  CHECK(two.placements[0].reason == PlacementReason::Greedy);

  // No root cycle: three heaviest branches in turn.
  const Graph b(7, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {0, 6}}, 0);
  CHECK(vertices(alg_a_round(whole(b), validate_and_decompose(b), 3)) == std::vector<Vertex>{1, 4, 6});

  const Graph c = two_root_cycles();
  CHECK_THROWS_AS(alg_a_round(whole(c), validate_and_decompose(c), 1), Error);
}

TEST_CASE("alg-a takes both cycle neighbours when the cycle outweighs the two best") {
  const Graph c = test::cycle(8);
  const auto out = alg_a_round(whole(c), validate_and_decompose(c), 2);
  CHECK(vertices(out) == std::vector<Vertex>{1, 8});
  CHECK(out.placements[0].reason == PlacementReason::CyclePair);
  CHECK(out.placements[0].gain + out.placements[1].gain == 8);
}

TEST_CASE("improved break on a plain cycle") {
  const Graph c = test::cycle(6);
  const auto d = validate_and_decompose(c);
  const auto r = improved_break(c, d, SqrtOf{6});
  CHECK(r.u_star == 1);
  CHECK(r.threshold == 3);
  CHECK(r.d_max == 4);
  CHECK(r.vertex == 1);
  CHECK(r.cooldown == 6);
  try {
    improved_break(c, d, SqrtOf{100});
    FAIL("expected NoEligibleCycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoEligibleCycle);
  }
}

TEST_CASE("improved break stops at a heavy first vertex") {
  // u1 carries a chain of four, so kappa(u1) already reaches past d_max.
  const Graph g = test::cycle(6, {{1, 7}, {7, 8}, {8, 9}, {9, 10}}, 11);
  const auto r = improved_break(g, validate_and_decompose(g), SqrtOf{11});
  CHECK(r.vertex == r.u_star);
}

TEST_CASE("alg-c round decisions") {
  const Graph tad = make_tadpole(10, 3);
  const auto d = validate_and_decompose(tad);

  CooldownState hot{3, CooldownOrigin{1, 1, {0, 1, 2}}};
  const auto cooled = alg_c_round(whole(tad), d, 1, hot, 14);
  CHECK(vertices(cooled) == std::vector<Vertex>{11});
  CHECK(cooled.placements[0].reason == PlacementReason::Greedy);
  CHECK(cooled.cooldown.remaining == 0);
  CHECK_FALSE(cooled.cooldown.origin.has_value());

  const auto broke = alg_c_round(whole(tad), d, 1, {}, 14);
  REQUIRE(broke.placements.size() == 1);
  CHECK(broke.placements[0].reason == PlacementReason::ImprovedBreak);
  REQUIRE(broke.breaks.size() == 1);
  CHECK(broke.cooldown.remaining == broke.breaks[0].improved->cooldown);
  CHECK(broke.cooldown.remaining > 0);

  // Light cycle: w(C1)^2 <= n, so greedy.
  const Graph small = test::cycle(3, {{0, 4}}, 5);
  const auto g = alg_c_round(whole(small), validate_and_decompose(small), 1, {}, 14);
  CHECK(g.placements[0].reason == PlacementReason::Greedy);

  // Cool-down still ticks in a round without firefighters.
  const auto idle = alg_c_round(whole(tad), d, 0, CooldownState{2, CooldownOrigin{}}, 14);
  CHECK(idle.placements.empty());
  CHECK(idle.cooldown.remaining == 1);
}

TEST_CASE("alg-e round decisions") {
  const Instance tight = make_alge_tight(4);
  const AlgeTightIds id{4};
  const auto first = alg_e_round(whole(tight.graph), validate_and_decompose(tight.graph), 2);
  CHECK(vertices(first) == std::vector<Vertex>{id.a(1), id.b(1)});
  CHECK(first.placements[0].gain == 10);
  CHECK(first.placements[1].gain == 10);

  const Graph c = two_root_cycles();
  const auto d = validate_and_decompose(c);
  const auto pair = alg_e_round(whole(c), d, 2);
  CHECK(vertices(pair) == std::vector<Vertex>{1, 8});
  CHECK(pair.placements[1].reason == PlacementReason::CyclePair);

  const auto one = alg_e_round(whole(c), d, 1);
  CHECK(vertices(one) == std::vector<Vertex>{4});
  CHECK(one.placements[0].reason == PlacementReason::Greedy);
}

TEST_CASE("full runs") {
  CHECK(run_algorithm(test::instance(test::path(2), {1}), AlgorithmKind::GreedyTree).profit == 2);
  CHECK(run_algorithm(make_alge_tight(4), AlgorithmKind::AlgE).profit == 20);

  const auto tad = test::instance(make_tadpole(10, 3), {1, 1});
  const auto a = run_algorithm(tad, AlgorithmKind::AlgA);
  CHECK(a.trace.front().vertex == 1);  // opens on the cycle, so the path-first bound does not apply
  CHECK(a.profit == 9);
  const auto e = run_algorithm(tad, AlgorithmKind::AlgE);
  CHECK(e.trace.front().vertex == 11);
  CHECK(e.profit <= 1 + 3);

  CHECK_THROWS_AS(run_algorithm(Instance{two_root_cycles(), {1}, ""}, AlgorithmKind::AlgA), Error);
  CHECK_THROWS_AS(run_algorithm(tad, AlgorithmKind::GreedyTree), Error);
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0);
  try {
    run_algorithm(Instance{k4, {1}, ""}, AlgorithmKind::AlgC);
    FAIL("expected WrongGraphClass");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::WrongGraphClass);
  }
}

TEST_CASE("run records time labels and views") {
  const auto inst = test::instance(make_tadpole(10, 3), {1, 1});
  const auto r = run_algorithm(inst, AlgorithmKind::AlgC, {true});
  REQUIRE(r.breaks.size() == 1);
  CHECK(r.breaks[0].round == 1);
  CHECK(r.breaks[0].time_label == 1);
  CHECK(r.reasons.size() == r.trace.size());
  CHECK(r.gains.size() == r.trace.size());
  CHECK(r.round_views.front().graph == inst.graph);
  CHECK(r.diagnostics.empty());
}
