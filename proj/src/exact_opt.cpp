#include "firefight/exact_opt.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "firefight/cactus.hpp"
#include "firefight/errors.hpp"

namespace firefight {

namespace {

struct Node {
  VertexSet burned;
  VertexSet live;  // unburned vertices the fire can still reach
  int round = 1;

  bool operator==(const Node&) const = default;
};

struct NodeHash {
  std::size_t operator()(const Node& s) const {
    return s.burned.hash() * 0x9e3779b97f4a7c15ULL ^ s.live.hash() ^ static_cast<std::size_t>(s.round) * 0x85ebca6bULL;
  }
};

struct Best {
  int value = 0;
  ProtectionSchedule tail;
};

class Solver {
 public:
  Solver(const Instance& inst, const SolverOptions& options)
      : inst_(inst), g_(inst.graph), options_(options), last_round_(static_cast<int>(inst.sequence.size())) {}

  Best solve() {
    VertexSet burned(g_.num_vertices(), {g_.root()});
    return search(Node{burned, reach(burned, VertexSet::full(g_.num_vertices())), 1});
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  // Vertices of `allowed` reachable from the fire inside `allowed`.
  VertexSet reach(const VertexSet& burned, const VertexSet& allowed) const {
    VertexSet seen = burned;
    std::vector<Vertex> stack = burned.members();
    VertexSet out(g_.num_vertices());
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g_.neighbors(u)) {
        if (seen.contains(v) || !allowed.contains(v)) continue;
        seen.insert(v);
        out.insert(v);
        stack.push_back(v);
      }
    }
    return out;
  }

  VertexSet frontier(const Node& s) const {
    VertexSet out(g_.num_vertices());
    for (Vertex v : s.live.members()) {
      for (Vertex u : g_.neighbors(v)) {
        if (s.burned.contains(u)) {
          out.insert(v);
          break;
        }
      }
    }
    return out;
  }

  int upper_bound(const Node& s) const {
    const int f = inst_.firefighters(s.round);
    const int doomed = std::max(0, frontier(s).size() - f);
    return g_.num_vertices() - s.burned.size() - doomed;
  }

  Node advance(const Node& s, const VertexSet& chosen) const {
    const VertexSet live = reach(s.burned, s.live - chosen);
    VertexSet burned = s.burned;
    for (Vertex v : live.members()) {
      for (Vertex u : g_.neighbors(v)) {
        if (s.burned.contains(u)) {
          burned.insert(v);
          break;
        }
      }
    }
    Node next{burned, live - burned, std::min(s.round + 1, last_round_ + 1)};
    return next;
  }

  Best search(const Node& s) {
    if (++nodes_ > options_.node_budget) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "search exceeded " + std::to_string(options_.node_budget) + " nodes");
    }
    if (s.live.empty()) return {g_.num_vertices() - s.burned.size(), {}};
    if (s.round > last_round_) return {g_.num_vertices() - s.burned.size() - s.live.size(), {}};
    if (options_.memoize) {
      if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    }

    const auto candidates = s.live.members();
    const int k = std::min(inst_.firefighters(s.round), static_cast<int>(candidates.size()));
    Best best{-1, {}};
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    const int m = static_cast<int>(candidates.size());
    while (true) {
      VertexSet chosen(g_.num_vertices());
      for (int i : pick) chosen.insert(candidates[static_cast<std::size_t>(i)]);
      const Node child = advance(s, chosen);
      if (best.value < 0 || upper_bound(child) > best.value) {
        Best sub = search(child);
        if (sub.value > best.value) {
          best.value = sub.value;
          best.tail.clear();
          for (int i : pick) best.tail.push_back({s.round, candidates[static_cast<std::size_t>(i)]});
          best.tail.insert(best.tail.end(), sub.tail.begin(), sub.tail.end());
        }
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (options_.memoize) memo_.emplace(s, best);
    return best;
  }

  const Instance& inst_;
  const Graph& g_;
  SolverOptions options_;
  int last_round_;
  std::int64_t nodes_ = 0;
  std::unordered_map<Node, Best, NodeHash> memo_;
};

}  // namespace

OptResult solve_opt(const Instance& instance, const SolverOptions& options) {
  if (instance.num_vertices() > options.max_vertices) {
    throw Error(ErrorCode::GraphTooLarge, "n = " + std::to_string(instance.num_vertices()) + " exceeds the cap of " +
                                              std::to_string(options.max_vertices));
  }
  Solver solver(instance, options);
  Best best = solver.solve();
  return {best.value, std::move(best.tail), solver.nodes()};
}

ProtectionSchedule normalize_nonredundant(const Instance& instance, const ProtectionSchedule& schedule) {
  replay(instance, schedule);
  const auto decomp = validate_and_decompose(instance.graph);
  ProtectionSchedule out = schedule;
  auto is_protected = [&](Vertex v) {
    return std::any_of(out.begin(), out.end(), [v](const ScheduledProtection& p) { return p.vertex == v; });
  };
  for (const auto& cycle : decomp.cycles) {
    // A protected front vertex already shields the whole cycle.
    if (cycle.front() != decomp.root && is_protected(cycle.front())) {
      std::erase_if(out, [&](const ScheduledProtection& p) {
        return std::find(cycle.begin() + 1, cycle.end(), p.vertex) != cycle.end();
      });
      continue;
    }
    while (true) {
      // Protections on the cycle's non-front vertices, in cyclic order.
      std::vector<std::size_t> hits;
      for (std::size_t pos = 1; pos < cycle.size(); ++pos) {
        for (std::size_t i = 0; i < out.size(); ++i) {
          if (out[i].vertex == cycle[pos]) hits.push_back(i);
        }
      }
      if (hits.size() < 3) break;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(hits[1]));
    }
  }
  return out;
}

int opt_upper_bound(const Instance& instance) {
  const int total = std::accumulate(instance.sequence.begin(), instance.sequence.end(), 0);
  if (total == 0) return 0;
  const auto& g = instance.graph;
  return g.num_vertices() - 1 - std::max(0, g.degree(g.root()) - instance.firefighters(1));
}

}  // namespace firefight
