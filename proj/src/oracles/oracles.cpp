#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace firefight::oracle {

namespace {

void walk_paths(const Graph& g, const VertexSet& s, Vertex u, std::vector<char>& on_path, std::vector<char>& escaped) {
  escaped[static_cast<std::size_t>(u)] = 1;
  for (Vertex v : g.neighbors(u)) {
    if (on_path[static_cast<std::size_t>(v)] || s.contains(v)) continue;
    on_path[static_cast<std::size_t>(v)] = 1;
    walk_paths(g, s, v, on_path, escaped);
    on_path[static_cast<std::size_t>(v)] = 0;
  }
}

void extend_cycles(const Graph& g, Vertex start, Vertex u, std::vector<char>& on_path, int length, int& total) {
  for (Vertex v : g.neighbors(u)) {
    if (v == start && length >= 3) ++total;
    if (v <= start || on_path[static_cast<std::size_t>(v)]) continue;
    on_path[static_cast<std::size_t>(v)] = 1;
    extend_cycles(g, start, v, on_path, length + 1, total);
    on_path[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

VertexSet covered_set_by_paths(const Graph& g, const VertexSet& s) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> on_path(n, 0), escaped(n, 0);
  on_path[static_cast<std::size_t>(g.root())] = 1;
  walk_paths(g, s, g.root(), on_path, escaped);
  VertexSet out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!escaped[static_cast<std::size_t>(v)]) out.insert(v);
  }
  return out;
}

int count_simple_cycles(const Graph& g) {
  int total = 0;
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    on_path[static_cast<std::size_t>(start)] = 1;
    extend_cycles(g, start, start, on_path, 1, total);
    on_path[static_cast<std::size_t>(start)] = 0;
  }
  return total / 2;  // each cycle is found in both directions
}

int view_only_profit(const Instance& instance, const ProtectionSchedule& schedule) {
  // Quotient graph keyed by original ids; the merged fire lives under key -1.
  constexpr int kFire = -1;
  std::map<int, std::set<int>> adj;
  for (Vertex v = 0; v < instance.num_vertices(); ++v) adj[v];
  for (auto [u, v] : instance.graph.edges()) {
    const int a = u == instance.graph.root() ? kFire : u;
    const int b = v == instance.graph.root() ? kFire : v;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  adj.erase(instance.graph.root());
  int burned = 1;
  int last_round = 0;
  for (const auto& p : schedule) last_round = std::max(last_round, p.round);

  for (int round = 1; round <= last_round || !adj[kFire].empty(); ++round) {
    std::set<int> guarded;
    for (const auto& p : schedule) {
      if (p.round == round && adj.count(p.vertex)) guarded.insert(p.vertex);
    }
    // Delete everything the fire can no longer reach.
    std::set<int> reach{kFire};
    std::vector<int> stack{kFire};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!guarded.count(v) && reach.insert(v).second) stack.push_back(v);
      }
    }
    for (auto it = adj.begin(); it != adj.end();) {
      if (reach.count(it->first)) {
        ++it;
        continue;
      }
      it = adj.erase(it);
    }
    for (auto& [u, nbrs] : adj) {
      for (auto it = nbrs.begin(); it != nbrs.end();) it = adj.count(*it) ? std::next(it) : nbrs.erase(it);
    }
    // Contract the fire's neighbours into it.
    const std::set<int> igniting = adj[kFire];
    std::set<int> merged;
    for (int v : igniting) {
      for (int w : adj[v]) merged.insert(w);
      adj.erase(v);
      ++burned;
    }
    for (int v : igniting) merged.erase(v);
    merged.erase(kFire);
    adj[kFire] = merged;
    for (auto& [u, nbrs] : adj) {
      if (u == kFire) continue;
      bool touches = false;
      for (int v : igniting) touches |= nbrs.erase(v) > 0;
      if (touches) nbrs.insert(kFire);
    }
  }
  return instance.num_vertices() - burned;
}

namespace {

int best_from(GameState state) {
  if (state.round() > static_cast<int>(state.instance().sequence.size())) {
    while (!state.is_finished()) state.spread();
    return state.profit();
  }
  std::vector<Vertex> open;
  for (Vertex v = 0; v < state.instance().num_vertices(); ++v) {
    if (state.status(v) == VertexStatus::Available) open.push_back(v);
  }
  const int f = state.firefighters_left();
  int best = 0;
  // Every subset of `open` with at most f members.
  std::vector<int> pick;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    GameState next = state;
    for (int i : pick) next.protect(open[static_cast<std::size_t>(i)]);
    next.spread();
    best = std::max(best, best_from(std::move(next)));
    if (static_cast<int>(pick.size()) == f) return;
    for (std::size_t i = from; i < open.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace

int brute_force_opt(const Instance& instance) { return best_from(GameState(instance)); }

}  // namespace firefight::oracle
