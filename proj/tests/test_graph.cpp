#include "doctest.h"
#include "firefight/errors.hpp"
#include "firefight/graph.hpp"
#include "support.hpp"

using namespace firefight;

TEST_CASE("vertex set basics") {
  VertexSet s(130, {0, 64, 129});
  CHECK(s.size() == 3);
  CHECK(s.contains(129));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.members() == std::vector<Vertex>{0, 64, 129});
  s.erase(64);
  CHECK(s.size() == 2);
  const VertexSet t(130, {0, 5});
  CHECK((s | t).size() == 3);
  CHECK((s & t).members() == std::vector<Vertex>{0});
  CHECK((s - t).members() == std::vector<Vertex>{129});
  CHECK(VertexSet(130, {0}).is_subset_of(s));
  CHECK(VertexSet::full(70).size() == 70);
  CHECK(VertexSet(10).empty());
}

TEST_CASE("graph rejects malformed input") {
  CHECK_THROWS_AS(Graph(0, {}, 0), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}, 0), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}, 0), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}, 0), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}}, 5), Error);
  try {
    Graph(2, {{0, 0}}, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGraph);
  }
}

TEST_CASE("graph adjacency is sorted and symmetric") {
  const Graph g(4, {{3, 0}, {0, 1}, {2, 0}}, 0);
  const auto nb = g.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.has_edge(3, 0));
  CHECK(g.has_edge(0, 3));
  CHECK(g.num_edges() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(g.is_connected());
  CHECK_FALSE(Graph(3, {{0, 1}}, 0).is_connected());
  CHECK(g.without_edge({0, 2}).num_edges() == 2);
  CHECK(g.with_root(2).root() == 2);
}

TEST_CASE("induced subgraph keeps root first and parent order") {
  const Graph g = test::cycle(4);
  const Subgraph sub = induced_subgraph(g, test::set_of(g, {0, 2, 3, 4}));
  CHECK(sub.original == std::vector<Vertex>{0, 2, 3, 4});
  CHECK(sub.graph.num_edges() == 3);
  CHECK(sub.local_of(3) == 2);
  CHECK(sub.local_of(1) == -1);

  const Edge drop{3, 4};
  const Subgraph cut = induced_subgraph(g, VertexSet::full(5), &drop);
  CHECK(cut.graph.num_edges() == 4);
  CHECK_FALSE(cut.graph.has_edge(3, 4));

  const Subgraph inner = induced_subgraph(sub.graph, test::set_of(sub.graph, {0, 2, 3}));
  const Subgraph both = compose(sub, inner);
  CHECK(both.original == std::vector<Vertex>{0, 3, 4});
}
