#pragma once

#include <vector>

#include "firefight/game.hpp"
#include "firefight/graph.hpp"

namespace firefight::test {

// r = 0, then 1..k along a path.
inline Graph path(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k + 1, edges, 0);
}

// Cycle (r, u1, ..., uk) with r = 0 and ui = i, plus extra edges.
inline Graph cycle(int k, std::vector<Edge> extra = {}, int n = 0) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(k, 0);
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(n > 0 ? n : k + 1, edges, 0);
}

inline VertexSet set_of(const Graph& g, std::initializer_list<Vertex> vs) { return VertexSet(g.num_vertices(), vs); }

inline Instance instance(Graph g, std::vector<int> sequence) { return Instance{std::move(g), std::move(sequence), ""}; }

}  // namespace firefight::test
