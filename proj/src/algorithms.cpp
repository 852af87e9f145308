#include "firefight/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "firefight/errors.hpp"

namespace firefight {

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::GreedyTree: return "greedy-tree";
    case AlgorithmKind::AlgA: return "alg-a";
    case AlgorithmKind::AlgC: return "alg-c";
    case AlgorithmKind::AlgE: return "alg-e";
  }
  return "unknown";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view name) {
  for (auto kind : {AlgorithmKind::GreedyTree, AlgorithmKind::AlgA, AlgorithmKind::AlgC, AlgorithmKind::AlgE}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(PlacementReason reason) {
  switch (reason) {
    case PlacementReason::Greedy: return "greedy";
    case PlacementReason::CyclePair: return "cycle-pair";
    case PlacementReason::BreakCycle: return "break-cycle";
    case PlacementReason::ImprovedBreak: return "improved-break";
  }
  return "unknown";
}

int ceil_sqrt(long long x) {
  if (x <= 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return static_cast<int>(r);
}

bool accepts(AlgorithmKind kind, GraphClass graph_class) {
  switch (kind) {
    case AlgorithmKind::GreedyTree: return graph_class == GraphClass::Tree;
    case AlgorithmKind::AlgA: return graph_class != GraphClass::Cactus;
    case AlgorithmKind::AlgC:
    case AlgorithmKind::AlgE: return true;
  }
  return false;
}

namespace {

struct Candidate {
  Vertex vertex;
  int weight;
};

// Heaviest first; lowest id among equals.
std::vector<Candidate> rank_by_weight(const Graph& g, std::vector<Vertex> pool) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<Candidate> out;
  out.reserve(pool.size());
  for (Vertex v : pool) {
    if (v != g.root()) out.push_back({v, weight_of(g, v)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });
  return out;
}

struct RankedCycle {
  int index;
  int weight;
};

// Root cycles, heaviest first; ties go to the cycle with the smallest member.
std::vector<RankedCycle> rank_root_cycles(const Graph& g, const CactusDecomposition& decomp) {
  std::vector<RankedCycle> out;
  for (int c : decomp.root_cycles()) out.push_back({c, cycle_weight(g, decomp, c)});
  auto lowest = [&](int c) {
    const auto& cyc = decomp.cycles[static_cast<std::size_t>(c)];
    return *std::min_element(cyc.begin() + 1, cyc.end());
  };
  std::sort(out.begin(), out.end(), [&](const RankedCycle& a, const RankedCycle& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return lowest(a.index) < lowest(b.index);
  });
  return out;
}

std::vector<Vertex> root_pool(const Graph& g, const CactusDecomposition& decomp, const std::vector<RankedCycle>& cycles) {
  std::vector<Vertex> pool(g.neighbors(g.root()).begin(), g.neighbors(g.root()).end());
  for (const auto& rc : cycles) {
    const auto& cyc = decomp.cycles[static_cast<std::size_t>(rc.index)];
    pool.insert(pool.end(), cyc.begin() + 1, cyc.end());
  }
  return pool;
}

// Holds the shrinking view inside one round.
class RoundWorker {
 public:
  RoundWorker(const Subgraph& view, const CactusDecomposition& decomp) : current_(view), decomp_(decomp) {}

  const Graph& graph() const { return current_.graph; }
  const Subgraph& view() const { return current_; }
  const CactusDecomposition& decomposition() const { return decomp_; }
  bool has_available() const { return current_.graph.num_vertices() > 1; }

  void place(std::vector<Vertex> local, PlacementReason reason) {
    VertexSet chosen(current_.graph.num_vertices());
    int covered_before = 0;
    for (Vertex v : local) {
      chosen.insert(v);
      const int covered = weight(current_.graph, chosen);
      outcome.placements.push_back({current_.original[static_cast<std::size_t>(v)], reason, covered - covered_before});
      covered_before = covered;
    }
    VertexSet keep = VertexSet::full(current_.graph.num_vertices());
    keep -= covered_set(current_.graph, chosen);
    current_ = compose(current_, induced_subgraph(current_.graph, keep));
    decomp_ = validate_and_decompose(current_.graph);
  }

  void record_break(int cycle, Vertex local, PlacementReason reason, std::optional<ImprovedBreakResult> improved) {
    BreakEvent event;
    event.view = current_;
    event.cycle = cycle;
    event.vertex = local;
    event.reason = reason;
    event.improved = improved;
    event.placement_index = static_cast<int>(outcome.placements.size());
    outcome.breaks.push_back(std::move(event));
  }

  void protect_heaviest_neighbor() {
    const auto nbrs = current_.graph.neighbors(current_.graph.root());
    const auto ranked = rank_by_weight(current_.graph, {nbrs.begin(), nbrs.end()});
    place({ranked.front().vertex}, PlacementReason::Greedy);
  }

  std::vector<Vertex> original_cycle(int cycle) const {
    return current_.to_original(decomp_.cycles[static_cast<std::size_t>(cycle)]);
  }

  RoundOutcome outcome;

 private:
  Subgraph current_;
  CactusDecomposition decomp_;
};

std::pair<Vertex, Vertex> root_neighbors_on(const CactusDecomposition& decomp, int cycle) {
  const auto& cyc = decomp.cycles[static_cast<std::size_t>(cycle)];
  return {cyc[1], cyc.back()};
}

// The shared f >= 2 step: protect v1 unless the heaviest root cycle outweighs
// the two heaviest candidates together. Returns the firefighters used.
int two_firefighter_step(RoundWorker& worker, const std::vector<Candidate>& ranked, const RankedCycle& heaviest) {
  const int w1 = ranked.at(0).weight;
  const int w2 = ranked.size() > 1 ? ranked[1].weight : 0;
  if (w1 + w2 >= heaviest.weight) {
    worker.place({ranked[0].vertex}, PlacementReason::Greedy);
    return 1;
  }
  const auto [a, b] = root_neighbors_on(worker.decomposition(), heaviest.index);
  worker.place({a, b}, PlacementReason::CyclePair);
  return 2;
}

}  // namespace

RoundOutcome greedy_tree_round(const Subgraph& view, int f) {
  const auto decomp = validate_and_decompose(view.graph);
  if (decomp.class_tag != GraphClass::Tree) throw Error(ErrorCode::NotATree, "greedy-tree needs a tree view");
  RoundWorker worker(view, decomp);
  while (f > 0 && worker.has_available()) {
    worker.protect_heaviest_neighbor();
    --f;
  }
  return std::move(worker.outcome);
}

RoundOutcome alg_a_round(const Subgraph& view, const CactusDecomposition& decomp, int f) {
  if (decomp.class_tag == GraphClass::Cactus) {
    throw Error(ErrorCode::WrongGraphClass, "alg-a needs a graph with at most one cycle");
  }
  RoundWorker worker(view, decomp);
  while (f > 0 && worker.has_available()) {
    const Graph& g = worker.graph();
    const auto& d = worker.decomposition();
    const auto cycles = rank_root_cycles(g, d);
    if (cycles.empty()) {
      worker.protect_heaviest_neighbor();
      --f;
      continue;
    }
    const auto& cycle = cycles.front();
    const auto ranked = rank_by_weight(g, root_pool(g, d, cycles));
    if (f >= 2) {
      f -= two_firefighter_step(worker, ranked, cycle);
      continue;
    }
    if (at_least_sqrt(ranked.front().weight, SqrtOf{cycle.weight})) {
      worker.place({ranked.front().vertex}, PlacementReason::Greedy);
    } else {
      // Break-cycle: the root neighbour on the cycle with the larger tolerance.
      const int m = ceil_sqrt(cycle.weight);
      const auto [a, b] = root_neighbors_on(d, cycle.index);
      const int tol_a = tolerance(g, d, a, cycle.index, m).value_or(-1);
      const int tol_b = tolerance(g, d, b, cycle.index, m).value_or(-1);
      Vertex pick = a;
      if (tol_b > tol_a || (tol_b == tol_a && b < a)) pick = b;
      worker.record_break(cycle.index, pick, PlacementReason::BreakCycle, std::nullopt);
      worker.place({pick}, PlacementReason::BreakCycle);
    }
    --f;
  }
  return std::move(worker.outcome);
}

ImprovedBreakResult improved_break(const Graph& view, const CactusDecomposition& decomp, SqrtOf eta) {
  const auto all_cycles = rank_root_cycles(view, decomp);
  std::vector<RankedCycle> cycles;
  for (const auto& rc : all_cycles) {
    if (at_least_sqrt(rc.weight, eta)) cycles.push_back(rc);
  }
  if (cycles.empty()) throw Error(ErrorCode::NoEligibleCycle, "no root cycle reaches the threshold");

  const int heaviest = cycles.front().weight;
  const int m = ceil_sqrt(heaviest);
  const Vertex r = view.root();

  std::optional<ImprovedBreakResult> best;
  for (const auto& rc : cycles) {
    const auto [a, b] = root_neighbors_on(decomp, rc.index);
    for (Vertex u : {a, b}) {
      const long long slack = static_cast<long long>(rc.weight) - weight_of(view, u);
      if (!at_least_sqrt(slack, SqrtOf{heaviest})) continue;
      const auto tol = tolerance_edge(view, decomp, make_edge(u, r), rc.index, m);
      if (!tol) continue;
      if (!best || *tol > best->d_max || (*tol == best->d_max && u < best->u_star)) {
        ImprovedBreakResult candidate;
        candidate.u_star = u;
        candidate.d_max = *tol;
        candidate.cycle = rc.index;
        candidate.heaviest_cycle = cycles.front().index;
        candidate.threshold = m;
        best = candidate;
      }
    }
  }
  if (!best) throw Error(ErrorCode::NoEligibleBreakVertex, "no root neighbour leaves enough weight on its cycle");

  // Walk the chosen cycle starting at u_*, away from the root.
  auto order = decomp.cycles[static_cast<std::size_t>(best->cycle)];
  order.erase(order.begin());
  if (order.front() != best->u_star) std::reverse(order.begin(), order.end());

  const auto opened = break_subgraph_edge(view, decomp, best->cycle, make_edge(best->u_star, r));
  const auto local_dist = distances_from(opened.graph, VertexSet(opened.num_vertices()), opened.graph.root());
  std::vector<int> opened_dist(static_cast<std::size_t>(view.num_vertices()), kUnreachable);
  for (std::size_t i = 0; i < opened.original.size(); ++i) {
    opened_dist[static_cast<std::size_t>(opened.original[i])] = local_dist[i];
  }

  for (Vertex candidate : order) {
    const auto covered = covered_set(view, VertexSet(view.num_vertices(), {candidate}));
    for (Vertex v : covered.members()) {
      const int dv = opened_dist[static_cast<std::size_t>(v)];
      if (dv != kUnreachable && dv >= best->d_max) {
        best->vertex = candidate;
        best->cooldown = opened_dist[static_cast<std::size_t>(candidate)];
        return *best;
      }
    }
  }
  throw Error(ErrorCode::NoEligibleBreakVertex, "scan along the cycle found no vertex");
}

RoundOutcome alg_c_round(const Subgraph& view, const CactusDecomposition& decomp, int f, CooldownState cooldown,
                         int n_original) {
  RoundWorker worker(view, decomp);
  cooldown.remaining = std::max(0, cooldown.remaining - 1);
  if (cooldown.remaining == 0) cooldown.origin.reset();

  while (f > 0 && worker.has_available()) {
    const Graph& g = worker.graph();
    const auto& d = worker.decomposition();
    const auto cycles = rank_root_cycles(g, d);
    if (cycles.empty()) {
      worker.protect_heaviest_neighbor();
      --f;
      continue;
    }
    const auto& heaviest = cycles.front();
    const auto ranked = rank_by_weight(g, root_pool(g, d, cycles));
    if (f >= 2) {
      f -= two_firefighter_step(worker, ranked, heaviest);
      continue;
    }
    const bool greedy = at_least_sqrt(ranked.front().weight, SqrtOf{heaviest.weight}) ||
                        static_cast<long long>(heaviest.weight) * heaviest.weight <= n_original ||
                        cooldown.remaining > 0;
    std::optional<ImprovedBreakResult> chosen;
    if (!greedy) {
      try {
        chosen = improved_break(g, d, SqrtOf{n_original});
      } catch (const Error& e) {
        worker.outcome.diagnostics.push_back(std::string("improved-break fell back to greedy: ") + e.what());
      }
    }
    if (chosen) {
      worker.record_break(chosen->cycle, chosen->vertex, PlacementReason::ImprovedBreak, chosen);
      cooldown.remaining = chosen->cooldown;
      cooldown.origin = CooldownOrigin{0, worker.view().original[static_cast<std::size_t>(chosen->vertex)],
                                       worker.original_cycle(chosen->cycle)};
      worker.place({chosen->vertex}, PlacementReason::ImprovedBreak);
    } else {
      worker.place({ranked.front().vertex}, PlacementReason::Greedy);
      cooldown = {};
    }
    --f;
  }
  worker.outcome.cooldown = std::move(cooldown);
  return std::move(worker.outcome);
}

RoundOutcome alg_e_round(const Subgraph& view, const CactusDecomposition& decomp, int f) {
  RoundWorker worker(view, decomp);
  while (f > 0 && worker.has_available()) {
    const Graph& g = worker.graph();
    const auto& d = worker.decomposition();
    const auto cycles = rank_root_cycles(g, d);
    if (cycles.empty()) {
      worker.protect_heaviest_neighbor();
      --f;
      continue;
    }
    const auto ranked = rank_by_weight(g, root_pool(g, d, cycles));
    if (f >= 2) {
      f -= two_firefighter_step(worker, ranked, cycles.front());
    } else {
      worker.place({ranked.front().vertex}, PlacementReason::Greedy);
      --f;
    }
  }
  return std::move(worker.outcome);
}

RunResult run_algorithm(const Instance& instance, AlgorithmKind kind, const RunOptions& options) {
  GraphClass graph_class;
  try {
    graph_class = validate_and_decompose(instance.graph).class_tag;
  } catch (const Error& e) {
    throw Error(ErrorCode::WrongGraphClass, e.what());
  }
  if (!accepts(kind, graph_class)) {
    throw Error(ErrorCode::WrongGraphClass,
                std::string(to_string(kind)) + " does not accept a " + std::string(to_string(graph_class)));
  }

  const int n = instance.num_vertices();
  GameState state(instance);
  CooldownState cooldown;
  RunResult result;
  while (!state.is_finished()) {
    const int f = instance.firefighters(state.round());
    const Subgraph view = state.reduced_view();
    if (options.record_views) result.round_views.push_back(view);
    const auto decomp = validate_and_decompose(view.graph);

    RoundOutcome outcome;
    switch (kind) {
      case AlgorithmKind::GreedyTree: outcome = greedy_tree_round(view, f); break;
      case AlgorithmKind::AlgA: outcome = alg_a_round(view, decomp, f); break;
      case AlgorithmKind::AlgC: outcome = alg_c_round(view, decomp, f, cooldown, n); break;
      case AlgorithmKind::AlgE: outcome = alg_e_round(view, decomp, f); break;
    }

    const int first_label = static_cast<int>(state.trace().size()) + 1;
    for (const auto& p : outcome.placements) {
      state.protect(p.vertex);
      result.reasons.push_back(p.reason);
      result.gains.push_back(p.gain);
    }
    for (auto& event : outcome.breaks) {
      event.round = state.round();
      event.time_label = first_label + event.placement_index;
      result.breaks.push_back(std::move(event));
    }
    if (kind == AlgorithmKind::AlgC) {
      cooldown = std::move(outcome.cooldown);
      if (cooldown.origin && cooldown.origin->time_label == 0) {
        cooldown.origin->time_label = result.breaks.back().time_label;
      }
    }
    for (auto& msg : outcome.diagnostics) result.diagnostics.push_back(std::move(msg));
    state.spread();
  }
  result.profit = state.profit();
  result.trace = state.trace();
  return result;
}

}  // namespace firefight
