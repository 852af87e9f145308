#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "firefight/graph.hpp"

namespace firefight {

enum class GraphClass { Tree, OneAlmostTree, Cactus };

std::string_view to_string(GraphClass c);

// The simple cycles of a cactus. Each cycle is listed in cyclic order starting
// at its vertex closest to the root (the root itself for a root cycle), then
// continuing towards the lower-id of that vertex's two cycle neighbours.
struct CactusDecomposition {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> cycles;
  std::map<Edge, int> edge_cycle;
  std::vector<std::vector<int>> vertex_cycles;
  GraphClass class_tag = GraphClass::Tree;

  std::optional<int> cycle_of_edge(Edge e) const;
  bool on_cycle(Vertex v, int cycle) const;
  bool is_root_cycle(int cycle) const { return cycles[static_cast<std::size_t>(cycle)].front() == root; }
  std::vector<int> root_cycles() const;
};

// Throws Error(Disconnected) or Error(NotCactus).
CactusDecomposition validate_and_decompose(const Graph& g);

constexpr int kUnreachable = std::numeric_limits<int>::max();

// BFS hop distances from `source` in g minus `removed`; kUnreachable where no
// path exists (and for removed vertices).
std::vector<int> distances_from(const Graph& g, const VertexSet& removed, Vertex source);

// kappa(s): every vertex whose every root path (in g minus removed) meets s.
VertexSet covered_set(const Graph& g, const VertexSet& removed, const VertexSet& s);
VertexSet covered_set(const Graph& g, const VertexSet& s);
int weight(const Graph& g, const VertexSet& removed, const VertexSet& s);
int weight(const Graph& g, const VertexSet& s);
int weight_of(const Graph& g, Vertex v);

int dist(const Graph& g, const VertexSet& removed, Vertex u, Vertex v);

// Vertices outside `removed` at distance >= d from the root. Unreachable
// vertices count for every d.
int count_safe(const Graph& g, const VertexSet& removed, int d);
int count_safe(const Graph& g, int d);

// kappa of the cycle's non-root vertices.
VertexSet cycle_cover(const Graph& g, const CactusDecomposition& decomp, int cycle);
int cycle_weight(const Graph& g, const CactusDecomposition& decomp, int cycle);

// Induced subgraph on {r} + kappa(C) - kappa(v).
Subgraph break_subgraph(const Graph& g, const CactusDecomposition& decomp, int cycle, Vertex v);
// Induced subgraph on {r} + kappa(C) with only the edge e missing.
Subgraph break_subgraph_edge(const Graph& g, const CactusDecomposition& decomp, int cycle, Edge e);

// Largest d with count_safe(view, d) >= m; nullopt when even d = 0 falls short.
std::optional<int> largest_safe_depth(const Graph& view, int m);

std::optional<int> tolerance(const Graph& g, const CactusDecomposition& decomp, Vertex u, int cycle, int m);
std::optional<int> tolerance_edge(const Graph& g, const CactusDecomposition& decomp, Edge e, int cycle, int m);

}  // namespace firefight
