#include "firefight/cactus.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "firefight/errors.hpp"

namespace firefight {

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::OneAlmostTree: return "one-almost-tree";
    case GraphClass::Cactus: return "cactus";
  }
  return "unknown";
}

std::optional<int> CactusDecomposition::cycle_of_edge(Edge e) const {
  auto it = edge_cycle.find(make_edge(e.first, e.second));
  if (it == edge_cycle.end()) return std::nullopt;
  return it->second;
}

bool CactusDecomposition::on_cycle(Vertex v, int cycle) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_cycles.size()) return false;
  const auto& cs = vertex_cycles[static_cast<std::size_t>(v)];
  return std::find(cs.begin(), cs.end(), cycle) != cs.end();
}

std::vector<int> CactusDecomposition::root_cycles() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    if (is_root_cycle(c)) out.push_back(c);
  }
  return out;
}

namespace {

// Biconnected components as edge lists (Hopcroft-Tarjan with an explicit stack).
std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> components;
  int clock = 0;

  for (Vertex start = 0; start < n; ++start) {
    if (disc[static_cast<std::size_t>(start)] != -1) continue;
    disc[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = clock++;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto nbrs = g.neighbors(v);
      if (next < nbrs.size()) {
        const Vertex w = nbrs[next++];
        const auto vi = static_cast<std::size_t>(v);
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          parent[wi] = v;
          edge_stack.emplace_back(v, w);
          disc[wi] = low[wi] = clock++;
          stack.emplace_back(w, 0);
        } else if (w != parent[vi] && disc[wi] < disc[vi]) {
          edge_stack.emplace_back(v, w);
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      const Vertex child = v;
      stack.pop_back();
      const Vertex p = parent[static_cast<std::size_t>(child)];
      if (p < 0) continue;
      const auto ci = static_cast<std::size_t>(child);
      const auto pi = static_cast<std::size_t>(p);
      low[pi] = std::min(low[pi], low[ci]);
      if (low[ci] >= disc[pi]) {
        std::vector<Edge> component;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          component.push_back(make_edge(e.first, e.second));
          if (e.first == p && e.second == child) break;
        }
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

}  // namespace

CactusDecomposition validate_and_decompose(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");

  const auto root_dist = distances_from(g, VertexSet(g.num_vertices()), g.root());
  CactusDecomposition out;
  out.root = g.root();
  out.vertex_cycles.assign(static_cast<std::size_t>(g.num_vertices()), {});

  for (const auto& component : biconnected_components(g)) {
    if (component.size() == 1) continue;
    std::map<Vertex, std::vector<Vertex>> cycle_adj;
    for (auto [u, v] : component) {
      cycle_adj[u].push_back(v);
      cycle_adj[v].push_back(u);
    }
    const bool is_cycle = cycle_adj.size() == component.size() &&
                          std::all_of(cycle_adj.begin(), cycle_adj.end(),
                                      [](const auto& kv) { return kv.second.size() == 2; });
    if (!is_cycle) {
      throw Error(ErrorCode::NotCactus, "biconnected component with " + std::to_string(cycle_adj.size()) +
                                            " vertices and " + std::to_string(component.size()) +
                                            " edges is not a single cycle");
    }

    Vertex start = cycle_adj.begin()->first;
    for (const auto& [v, _] : cycle_adj) {
      if (root_dist[static_cast<std::size_t>(v)] < root_dist[static_cast<std::size_t>(start)]) start = v;
    }
    std::vector<Vertex> order{start};
    Vertex prev = start;
    Vertex cur = std::min(cycle_adj[start][0], cycle_adj[start][1]);
    while (cur != start) {
      order.push_back(cur);
      const auto& nb = cycle_adj[cur];
      const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
    }

    const int index = static_cast<int>(out.cycles.size());
    for (auto e : component) out.edge_cycle[e] = index;
    for (Vertex v : order) out.vertex_cycles[static_cast<std::size_t>(v)].push_back(index);
    out.cycles.push_back(std::move(order));
  }

  // Stable cycle numbering independent of DFS order.
  std::vector<int> perm(out.cycles.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    auto key = [&](int c) {
      const auto& cyc = out.cycles[static_cast<std::size_t>(c)];
      return std::make_pair(cyc.front(), *std::min_element(cyc.begin() + 1, cyc.end()));
    };
    return key(a) < key(b);
  });
  std::vector<int> rank(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> sorted;
  for (int c : perm) sorted.push_back(std::move(out.cycles[static_cast<std::size_t>(c)]));
  out.cycles = std::move(sorted);
  for (auto& [e, c] : out.edge_cycle) c = rank[static_cast<std::size_t>(c)];
  for (auto& cs : out.vertex_cycles) {
    for (auto& c : cs) c = rank[static_cast<std::size_t>(c)];
    std::sort(cs.begin(), cs.end());
  }

  switch (out.cycles.size()) {
    case 0: out.class_tag = GraphClass::Tree; break;
    case 1: out.class_tag = GraphClass::OneAlmostTree; break;
    default: out.class_tag = GraphClass::Cactus; break;
  }
  return out;
}

std::vector<int> distances_from(const Graph& g, const VertexSet& removed, Vertex source) {
  std::vector<int> d(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  if (removed.contains(source)) return d;
  std::queue<Vertex> queue;
  d[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u)) {
      auto& dv = d[static_cast<std::size_t>(v)];
      if (dv == kUnreachable && !removed.contains(v)) {
        dv = d[static_cast<std::size_t>(u)] + 1;
        queue.push(v);
      }
    }
  }
  return d;
}

VertexSet covered_set(const Graph& g, const VertexSet& removed, const VertexSet& s) {
  if (s.contains(g.root())) throw Error(ErrorCode::RootInS, "the fire source cannot be covered");
  VertexSet blocked = removed | s;
  const auto d = distances_from(g, blocked, g.root());
  VertexSet out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!removed.contains(v) && d[static_cast<std::size_t>(v)] == kUnreachable) out.insert(v);
  }
  return out;
}

VertexSet covered_set(const Graph& g, const VertexSet& s) { return covered_set(g, VertexSet(g.num_vertices()), s); }

int weight(const Graph& g, const VertexSet& removed, const VertexSet& s) { return covered_set(g, removed, s).size(); }

int weight(const Graph& g, const VertexSet& s) { return covered_set(g, s).size(); }

int weight_of(const Graph& g, Vertex v) { return weight(g, VertexSet(g.num_vertices(), {v})); }

int dist(const Graph& g, const VertexSet& removed, Vertex u, Vertex v) {
  if (removed.contains(u) || removed.contains(v)) return kUnreachable;
  return distances_from(g, removed, u)[static_cast<std::size_t>(v)];
}

int count_safe(const Graph& g, const VertexSet& removed, int d) {
  const auto dists = distances_from(g, removed, g.root());
  int total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!removed.contains(v) && dists[static_cast<std::size_t>(v)] >= d) ++total;
  }
  return total;
}

int count_safe(const Graph& g, int d) { return count_safe(g, VertexSet(g.num_vertices()), d); }

VertexSet cycle_cover(const Graph& g, const CactusDecomposition& decomp, int cycle) {
  VertexSet members(g.num_vertices());
  for (Vertex v : decomp.cycles.at(static_cast<std::size_t>(cycle))) {
    if (v != g.root()) members.insert(v);
  }
  return covered_set(g, members);
}

int cycle_weight(const Graph& g, const CactusDecomposition& decomp, int cycle) {
  return cycle_cover(g, decomp, cycle).size();
}

namespace {

void require_root_cycle(const CactusDecomposition& decomp, int cycle) {
  if (cycle < 0 || cycle >= static_cast<int>(decomp.cycles.size())) {
    throw Error(ErrorCode::NotRootCycle, "no cycle with index " + std::to_string(cycle));
  }
  if (!decomp.is_root_cycle(cycle)) {
    throw Error(ErrorCode::NotRootCycle, "cycle " + std::to_string(cycle) + " does not contain the root");
  }
}

}  // namespace

Subgraph break_subgraph(const Graph& g, const CactusDecomposition& decomp, int cycle, Vertex v) {
  require_root_cycle(decomp, cycle);
  if (v == g.root() || !decomp.on_cycle(v, cycle)) {
    throw Error(ErrorCode::VertexNotOnCycle, "vertex " + std::to_string(v) + " is not a non-root vertex of the cycle");
  }
  VertexSet keep = cycle_cover(g, decomp, cycle);
  keep -= covered_set(g, VertexSet(g.num_vertices(), {v}));
  keep.insert(g.root());
  return induced_subgraph(g, keep);
}

Subgraph break_subgraph_edge(const Graph& g, const CactusDecomposition& decomp, int cycle, Edge e) {
  require_root_cycle(decomp, cycle);
  const auto owner = decomp.cycle_of_edge(e);
  if (!owner || *owner != cycle) {
    throw Error(ErrorCode::EdgeNotOnCycle, "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                               ") is not on cycle " + std::to_string(cycle));
  }
  VertexSet keep = cycle_cover(g, decomp, cycle);
  keep.insert(g.root());
  const Edge dropped = make_edge(e.first, e.second);
  return induced_subgraph(g, keep, &dropped);
}

std::optional<int> largest_safe_depth(const Graph& view, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidM, "m must be at least 1");
  auto d = distances_from(view, VertexSet(view.num_vertices()), view.root());
  if (static_cast<int>(d.size()) < m) return std::nullopt;
  std::nth_element(d.begin(), d.begin() + (m - 1), d.end(), std::greater<>());
  return d[static_cast<std::size_t>(m - 1)];
}

std::optional<int> tolerance(const Graph& g, const CactusDecomposition& decomp, Vertex u, int cycle, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidM, "m must be at least 1");
  return largest_safe_depth(break_subgraph(g, decomp, cycle, u).graph, m);
}

std::optional<int> tolerance_edge(const Graph& g, const CactusDecomposition& decomp, Edge e, int cycle, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidM, "m must be at least 1");
  return largest_safe_depth(break_subgraph_edge(g, decomp, cycle, e).graph, m);
}

}  // namespace firefight
