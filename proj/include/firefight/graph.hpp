#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace firefight {

using Vertex = int;

// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Dense membership set over the vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  std::vector<Vertex> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph with a designated fire source. Neighbor lists are
// kept sorted so every traversal visits vertices in id order.
//
// Connectivity is not enforced here; validate_and_decompose rejects
// disconnected inputs.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::span<const Edge> edges, Vertex root);
  Graph(int n, std::initializer_list<Edge> edges, Vertex root)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), root) {}

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  Vertex root() const { return root_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;
  bool is_connected() const;

  Graph with_root(Vertex root) const;
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex root_ = 0;
  int num_edges_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A materialized subgraph. Local vertex i corresponds to original[i] in the
// parent graph; the root always sits at local id 0 and the remaining vertices
// keep the parent's relative order, so lowest-id tie-breaks agree.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;

  int num_vertices() const { return graph.num_vertices(); }
  // Local id of a parent vertex, or -1 when absent.
  Vertex local_of(Vertex parent_vertex) const;
  std::vector<Vertex> to_original(std::span<const Vertex> local) const;
};

// Induced subgraph on `keep` (which must contain g.root()). When `drop` is
// given, that edge is omitted as well.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep, const Edge* drop = nullptr);

// Re-expresses a subgraph of a subgraph in terms of the outer parent's ids.
Subgraph compose(const Subgraph& outer, Subgraph inner);

}  // namespace firefight
