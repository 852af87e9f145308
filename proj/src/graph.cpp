#include "firefight/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "firefight/errors.hpp"

namespace firefight {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotCactus: return "NotCactus";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootInS: return "RootInS";
    case ErrorCode::VertexNotOnCycle: return "VertexNotOnCycle";
    case ErrorCode::NotRootCycle: return "NotRootCycle";
    case ErrorCode::EdgeNotOnCycle: return "EdgeNotOnCycle";
    case ErrorCode::InvalidM: return "InvalidM";
    case ErrorCode::VertexUnavailable: return "VertexUnavailable";
    case ErrorCode::NoFirefighterLeft: return "NoFirefighterLeft";
    case ErrorCode::GameNotFinished: return "GameNotFinished";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::WrongGraphClass: return "WrongGraphClass";
    case ErrorCode::NoEligibleCycle: return "NoEligibleCycle";
    case ErrorCode::NoEligibleBreakVertex: return "NoEligibleBreakVertex";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVersion: return "UnknownVersion";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(universe_);
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const Edge> edges, Vertex root) : root_(root) {
  if (n <= 0) throw Error(ErrorCode::InvalidGraph, "graph needs at least one vertex");
  if (root < 0 || root >= n) throw Error(ErrorCode::InvalidGraph, "root " + std::to_string(root) + " out of range");
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::InvalidGraph, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(ErrorCode::InvalidGraph, "parallel edge at " + std::to_string(v));
    }
  }
  num_edges_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::queue<Vertex> queue;
  queue.push(root_);
  seen[static_cast<std::size_t>(root_)] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        queue.push(v);
      }
    }
  }
  return reached == adjacency_.size();
}

Graph Graph::with_root(Vertex root) const {
  if (root < 0 || root >= num_vertices()) throw Error(ErrorCode::InvalidGraph, "root out of range");
  Graph g = *this;
  g.root_ = root;
  return g;
}

Graph Graph::without_edge(Edge e) const {
  auto all = edges();
  std::erase(all, make_edge(e.first, e.second));
  return Graph(num_vertices(), all, root_);
}

// ----------------------------------------------------------------- Subgraph

Vertex Subgraph::local_of(Vertex parent_vertex) const {
  if (!original.empty() && original.front() == parent_vertex) return 0;
  // Non-root entries are sorted.
  auto it = std::lower_bound(original.begin() + 1, original.end(), parent_vertex);
  if (it != original.end() && *it == parent_vertex) return static_cast<Vertex>(it - original.begin());
  return -1;
}

std::vector<Vertex> Subgraph::to_original(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(original[static_cast<std::size_t>(v)]);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep, const Edge* drop) {
  const Vertex root = g.root();
  if (!keep.contains(root)) throw Error(ErrorCode::InvalidGraph, "induced subgraph must keep the root");
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
  Subgraph out;
  out.original.push_back(root);
  local[static_cast<std::size_t>(root)] = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v != root && keep.contains(v)) {
      local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const Vertex lu = local[static_cast<std::size_t>(u)];
    const Vertex lv = local[static_cast<std::size_t>(v)];
    if (lu < 0 || lv < 0) continue;
    if (drop != nullptr && make_edge(u, v) == make_edge(drop->first, drop->second)) continue;
    edges.push_back(make_edge(lu, lv));
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges, 0);
  return out;
}

Subgraph compose(const Subgraph& outer, Subgraph inner) {
  for (auto& v : inner.original) v = outer.original[static_cast<std::size_t>(v)];
  return inner;
}

}  // namespace firefight
