#include "firefight/game.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "firefight/errors.hpp"

namespace firefight {

ProtectionSchedule schedule_from_trace(const Trace& trace) {
  ProtectionSchedule out;
  out.reserve(trace.size());
  for (const auto& e : trace) out.push_back({e.round, e.vertex});
  return out;
}

GameState::GameState(Instance instance)
    : instance_(std::move(instance)),
      status_(static_cast<std::size_t>(instance_.graph.num_vertices()), VertexStatus::Available) {
  status_[static_cast<std::size_t>(instance_.graph.root())] = VertexStatus::Burned;
}

GameState new_game(Instance instance) { return GameState(std::move(instance)); }

int GameState::num_burned() const {
  return static_cast<int>(std::count(status_.begin(), status_.end(), VertexStatus::Burned));
}

VertexSet GameState::burned() const {
  VertexSet out(instance_.graph.num_vertices());
  for (Vertex v = 0; v < instance_.graph.num_vertices(); ++v) {
    if (status(v) == VertexStatus::Burned) out.insert(v);
  }
  return out;
}

VertexSet GameState::protected_vertices() const {
  VertexSet out(instance_.graph.num_vertices());
  for (Vertex v = 0; v < instance_.graph.num_vertices(); ++v) {
    if (status(v) == VertexStatus::Protected) out.insert(v);
  }
  return out;
}

void GameState::protect(Vertex v) {
  if (v < 0 || v >= instance_.graph.num_vertices() || status(v) != VertexStatus::Available) {
    throw Error(ErrorCode::VertexUnavailable, "vertex " + std::to_string(v) + " cannot be protected");
  }
  if (firefighters_left() <= 0) {
    throw Error(ErrorCode::NoFirefighterLeft, "no firefighter left in round " + std::to_string(round_));
  }
  status_[static_cast<std::size_t>(v)] = VertexStatus::Protected;
  ++placed_this_round_;
  trace_.push_back({static_cast<int>(trace_.size()) + 1, round_, v});
}

void GameState::spread() {
  std::vector<Vertex> ignite;
  const auto& g = instance_.graph;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (status(v) != VertexStatus::Available) continue;
    for (Vertex u : g.neighbors(v)) {
      if (status(u) == VertexStatus::Burned) {
        ignite.push_back(v);
        break;
      }
    }
  }
  for (Vertex v : ignite) status_[static_cast<std::size_t>(v)] = VertexStatus::Burned;
  ++round_;
  placed_this_round_ = 0;
}

bool GameState::is_finished() const {
  const auto& g = instance_.graph;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (status(v) != VertexStatus::Burned) continue;
    for (Vertex u : g.neighbors(v)) {
      if (status(u) == VertexStatus::Available) return false;
    }
  }
  return true;
}

int GameState::profit() const {
  if (!is_finished()) throw Error(ErrorCode::GameNotFinished, "fire can still spread");
  return instance_.graph.num_vertices() - num_burned();
}

Subgraph GameState::reduced_view() const {
  const auto& g = instance_.graph;
  const int n = g.num_vertices();
  // Available vertices still connected to the fire through unprotected vertices.
  std::vector<char> live(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (status(v) == VertexStatus::Burned) queue.push(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u)) {
      if (status(v) == VertexStatus::Available && !live[static_cast<std::size_t>(v)]) {
        live[static_cast<std::size_t>(v)] = 1;
        queue.push(v);
      }
    }
  }

  Subgraph view;
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  view.original.push_back(g.root());
  for (Vertex v = 0; v < n; ++v) {
    if (live[static_cast<std::size_t>(v)]) {
      local[static_cast<std::size_t>(v)] = static_cast<Vertex>(view.original.size());
      view.original.push_back(v);
    }
  }
  std::set<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const bool u_fire = status(u) == VertexStatus::Burned;
    const bool v_fire = status(v) == VertexStatus::Burned;
    const Vertex lu = u_fire ? 0 : local[static_cast<std::size_t>(u)];
    const Vertex lv = v_fire ? 0 : local[static_cast<std::size_t>(v)];
    if (lu < 0 || lv < 0 || lu == lv) continue;
    edges.insert(make_edge(lu, lv));
  }
  const std::vector<Edge> edge_list(edges.begin(), edges.end());
  view.graph = Graph(static_cast<int>(view.original.size()), edge_list, 0);
  return view;
}

ReplayResult replay(const Instance& instance, const ProtectionSchedule& schedule) {
  ProtectionSchedule ordered = schedule;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.round < b.round; });
  const int last_round = ordered.empty() ? 0 : ordered.back().round;
  if (!ordered.empty() && ordered.front().round < 1) {
    throw Error(ErrorCode::InvalidSchedule, "rounds are 1-based");
  }

  GameState state(instance);
  std::size_t next = 0;
  while (state.round() <= last_round || !state.is_finished()) {
    for (; next < ordered.size() && ordered[next].round == state.round(); ++next) {
      const Vertex v = ordered[next].vertex;
      if (v < 0 || v >= instance.num_vertices() || state.status(v) != VertexStatus::Available) {
        throw Error(ErrorCode::InvalidSchedule, "vertex " + std::to_string(v) + " is not available in round " +
                                                    std::to_string(state.round()));
      }
      if (state.firefighters_left() <= 0) {
        throw Error(ErrorCode::InvalidSchedule, "round " + std::to_string(state.round()) + " exceeds its budget");
      }
      state.protect(v);
    }
    state.spread();
  }
  const int profit = state.profit();
  return {profit, std::move(state)};
}

}  // namespace firefight
