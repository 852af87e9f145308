#include "lemmas.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "firefight/adversaries.hpp"
#include "firefight/algorithms.hpp"
#include "firefight/cactus.hpp"
#include "firefight/errors.hpp"
#include "firefight/exact_opt.hpp"
#include "firefight/generators.hpp"
#include "firefight/harness.hpp"
#include "firefight/instance_io.hpp"
#include "oracles.hpp"

namespace firefight {

namespace {

class Trial {
 public:
  Trial(const SuiteOptions& options, SuiteResult& result) : options_(options), result_(result) {}

  void check(bool ok, const Instance& inst, const std::function<std::string()>& detail) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (!result_.counterexample.empty()) return;
    std::ostringstream out;
    out << "# suite " << result_.name << "\n";
    std::istringstream lines(detail());
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
    out << serialize_instance(inst);
    result_.counterexample = out.str();
    if (!options_.counterexample_path.empty()) std::ofstream(options_.counterexample_path) << result_.counterexample;
  }

 private:
  const SuiteOptions& options_;
  SuiteResult& result_;
};

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Instance cactus_instance(std::mt19937_64& rng, int n_lo, int n_hi, bool even, int budget_hi = 4) {
  Instance inst;
  const int n = draw(rng, n_lo, std::max(n_lo, n_hi));
  inst.graph = random_cactus(n, 0.6, std::max(3, std::min(n, 9)), rng());
  const int length = draw(rng, 1, 4);
  inst.sequence = even ? random_sequence(length, 2 * draw(rng, 1, std::max(1, budget_hi / 2)), true, rng())
                       : random_sequence(length, draw(rng, 1, budget_hi), false, rng());
  inst.name = "cactus-" + std::to_string(n);
  return inst;
}

Instance root_cycle_instance(std::mt19937_64& rng, int n_lo, int n_hi) {
  Instance inst;
  const int n = draw(rng, n_lo, std::max(n_lo, n_hi));
  inst.graph = random_one_almost_tree(n, n, rng(), true);
  inst.sequence.assign(static_cast<std::size_t>(draw(rng, 1, n)), 1);
  inst.name = "root-cycle-" + std::to_string(n);
  return inst;
}

// A cactus whose root sits on a few long cycles, so breaks actually happen.
Instance heavy_cycle_cactus(std::mt19937_64& rng, int n_lo, int n_hi) {
  Instance inst;
  const int n = draw(rng, n_lo, std::max(n_lo, n_hi));
  inst.graph = random_cactus(n, 0.8, n, rng());
  inst.sequence.assign(static_cast<std::size_t>(draw(rng, 1, n)), 1);
  if (rng() % 3 == 0) inst.sequence[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(inst.sequence.size()) - 1))] = 2;
  inst.name = "heavy-cactus-" + std::to_string(n);
  return inst;
}

ProtectionSchedule random_play(const Instance& inst, std::mt19937_64& rng) {
  GameState state(inst);
  while (!state.is_finished()) {
    std::vector<Vertex> open;
    for (Vertex v = 0; v < inst.num_vertices(); ++v) {
      if (state.status(v) == VertexStatus::Available) open.push_back(v);
    }
    std::shuffle(open.begin(), open.end(), rng);
    const int k = std::min<int>(draw(rng, 0, std::max(0, state.firefighters_left())), static_cast<int>(open.size()));
    for (int i = 0; i < k; ++i) state.protect(open[static_cast<std::size_t>(i)]);
    state.spread();
  }
  return schedule_from_trace(state.trace());
}

VertexSet random_subset(std::mt19937_64& rng, const Graph& g, int max_size) {
  VertexSet s(g.num_vertices());
  const int k = draw(rng, 0, max_size);
  for (int i = 0; i < k && g.num_vertices() > 1; ++i) s.insert(draw(rng, 1, g.num_vertices() - 1));
  return s;
}

int safe_count(const Graph& g, const CactusDecomposition& d, int cycle, Vertex u, int depth) {
  return count_safe(break_subgraph(g, d, cycle, u).graph, depth);
}

std::string describe(const std::vector<std::pair<std::string, long long>>& fields) {
  std::ostringstream out;
  for (const auto& [k, v] : fields) out << k << " = " << v << "\n";
  return out.str();
}

std::vector<AlgorithmKind> kinds_for(GraphClass c) {
  std::vector<AlgorithmKind> out;
  for (auto kind : {AlgorithmKind::GreedyTree, AlgorithmKind::AlgA, AlgorithmKind::AlgC, AlgorithmKind::AlgE}) {
    if (accepts(kind, c)) out.push_back(kind);
  }
  return out;
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteResult&);

void count_monotone(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, o.n_max, false);
    const VertexSet removed = random_subset(rng, inst.graph, 2);
    for (int d = 0; d <= inst.num_vertices(); ++d) {
      const int hi = count_safe(inst.graph, removed, d);
      const int lo = count_safe(inst.graph, removed, d + 1);
      t.check(lo <= hi, inst, [&] { return describe({{"d", d}, {"count(d)", hi}, {"count(d+1)", lo}}); });
    }
  }
}

void covered_superset(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, o.n_max, false);
    const VertexSet s = random_subset(rng, inst.graph, 4);
    VertexSet unions(inst.num_vertices());
    for (Vertex v : s.members()) unions |= covered_set(inst.graph, VertexSet(inst.num_vertices(), {v}));
    t.check(unions.is_subset_of(covered_set(inst.graph, s)), inst, [] { return std::string("union not contained"); });
  }
}

void edge_count_identity(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, std::min(o.n_max, 12), false);
    const auto d = validate_and_decompose(inst.graph);
    const int cycles = static_cast<int>(d.cycles.size());
    const int brute = oracle::count_simple_cycles(inst.graph);
    t.check(inst.graph.num_edges() == inst.num_vertices() - 1 + cycles && cycles == brute, inst, [&] {
      return describe({{"edges", inst.graph.num_edges()}, {"cycles", cycles}, {"simple cycles", brute}});
    });
  }
}

void covered_set_oracle(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, std::min(o.n_max, 9), false);
    const VertexSet s = random_subset(rng, inst.graph, 3);
    t.check(covered_set(inst.graph, s) == oracle::covered_set_by_paths(inst.graph, s), inst,
            [&] { return describe({{"|S|", s.size()}}); });
  }
}

void neighbors_are_the_best(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = root_cycle_instance(rng, 3, o.n_max);
    const Graph& g = inst.graph;
    const auto d = validate_and_decompose(g);
    const int c = d.root_cycles().front();
    const auto& cycle = d.cycles[static_cast<std::size_t>(c)];
    const Vertex u1 = cycle[1], up = cycle.back();
    const int w1 = weight_of(g, u1), wp = weight_of(g, up);
    for (std::size_t h = 1; h < cycle.size(); ++h) {
      for (int depth = 0; depth <= g.num_vertices(); ++depth) {
        const int mid = safe_count(g, d, c, cycle[h], depth);
        const int left = safe_count(g, d, c, u1, depth) + w1;
        const int right = safe_count(g, d, c, up, depth) + wp;
        t.check(mid <= left || mid <= right, inst, [&] {
          return describe({{"u_h", cycle[h]}, {"d", depth}, {"count(T(C\\u_h),d)", mid}, {"via u1", left},
                           {"via up", right}});
        });
      }
    }
  }
}

void break_cycle_quality(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = root_cycle_instance(rng, 4, o.n_max);
    const auto run = run_algorithm(inst, AlgorithmKind::AlgA);
    bool any = false;
    for (const auto& ev : run.breaks) {
      if (ev.reason != PlacementReason::BreakCycle) continue;
      any = true;
      const Graph& g = ev.view.graph;
      const auto d = validate_and_decompose(g);
      const long long wc = cycle_weight(g, d, ev.cycle);
      const auto& cycle = d.cycles[static_cast<std::size_t>(ev.cycle)];
      for (std::size_t h = 1; h < cycle.size(); ++h) {
        for (int depth = 1; depth <= g.num_vertices(); ++depth) {
          const long long lhs = safe_count(g, d, ev.cycle, cycle[h], depth);
          const long long base = safe_count(g, d, ev.cycle, ev.vertex, depth) + 1;
          t.check(lhs * lhs <= 4 * wc * base * base, inst, [&] {
            return describe({{"round", ev.round}, {"u_hat (original)", ev.view.original[static_cast<std::size_t>(ev.vertex)]},
                             {"u_h (original)", ev.view.original[static_cast<std::size_t>(cycle[h])]}, {"d", depth},
                             {"w(C)", wc}, {"count(T(C\\u_h),d)", lhs}, {"count(T(C\\u_hat),d)+1", base}});
          });
        }
      }
    }
    if (!any) ++r.skipped;
  }
}

template <typename Fn>
void for_each_improved_break(const SuiteOptions& o, SuiteResult& r, Fn fn) {
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = heavy_cycle_cactus(rng, 5, std::max(o.n_max, 5));
    const auto run = run_algorithm(inst, AlgorithmKind::AlgC, {true});
    bool any = false;
    for (const auto& ev : run.breaks) {
      if (ev.reason != PlacementReason::ImprovedBreak) continue;
      any = true;
      fn(inst, run, ev);
    }
    if (!any) ++r.skipped;
  }
}

void improved_break_feasibility(const SuiteOptions& o, SuiteResult& r) {
  Trial t(o, r);
  for_each_improved_break(o, r, [&](const Instance& inst, const RunResult&, const BreakEvent& ev) {
    const auto& ib = *ev.improved;
    const Graph& g = ev.view.graph;
    const auto d = validate_and_decompose(g);
    const int count = safe_count(g, d, ib.cycle, ib.vertex, ib.d_max);
    const int w = weight_of(g, ib.vertex);
    t.check(count + w >= ib.threshold, inst, [&] {
      return describe({{"round", ev.round}, {"d_max", ib.d_max}, {"count", count}, {"w(u_hat)", w},
                       {"ceil sqrt w(C1)", ib.threshold}});
    });
  });
}

void secured_alternative_break(const SuiteOptions& o, SuiteResult& r) {
  Trial t(o, r);
  for_each_improved_break(o, r, [&](const Instance& inst, const RunResult&, const BreakEvent& ev) {
    const long long n = inst.num_vertices();
    const Graph& g = ev.view.graph;
    const auto d = validate_and_decompose(g);
    const long long wu = weight_of(g, ev.vertex);
    for (int c : d.root_cycles()) {
      const long long wc = cycle_weight(g, d, c);
      if (wc * wc < n) continue;
      const auto& cycle = d.cycles[static_cast<std::size_t>(c)];
      for (std::size_t h = 1; h < cycle.size(); ++h) {
        for (int depth = 1; depth <= n; ++depth) {
          const long long lhs = safe_count(g, d, c, cycle[h], depth);
          const long long rhs = safe_count(g, d, ev.cycle, ev.vertex, depth) + wu;
          t.check(lhs * lhs <= 4 * n * rhs * rhs, inst, [&] {
            return describe({{"round", ev.round}, {"cycle", c}, {"u (original)", ev.view.original[static_cast<std::size_t>(cycle[h])]},
                             {"d", depth}, {"count(T(C\\u),d)", lhs}, {"count(T(C_hat\\u_hat),d)+w(u_hat)", rhs}});
          });
        }
      }
    }
  });
}

void cooldown_quality(const SuiteOptions& o, SuiteResult& r) {
  Trial t(o, r);
  for_each_improved_break(o, r, [&](const Instance& inst, const RunResult& run, const BreakEvent& ev) {
    const long long n = inst.num_vertices();
    const int cooldown = ev.improved->cooldown;
    // First placement of the next round that places anything.
    std::size_t next = run.trace.size();
    for (std::size_t k = 0; k < run.trace.size(); ++k) {
      if (run.trace[k].round > ev.round) {
        next = k;
        break;
      }
    }
    if (next == run.trace.size()) return;
    const int next_round = run.trace[next].round;
    for (int q = ev.round + 1; q < next_round; ++q) {
      if (inst.firefighters(q) > 0) return;  // a firefighter round with nothing left to protect
    }
    if (next_round - ev.round > cooldown || run.reasons[next] != PlacementReason::Greedy) return;

    const Graph& g = ev.view.graph;
    const Subgraph& later = run.round_views[static_cast<std::size_t>(next_round - 1)];
    long long best = 0;
    for (Vertex x = 1; x < g.num_vertices(); ++x) {
      for (std::size_t j = 1; j < later.original.size(); ++j) {
        const Vertex x2 = ev.view.local_of(later.original[j]);
        if (x2 <= 0) continue;
        best = std::max<long long>(best, weight(g, VertexSet(g.num_vertices(), {x, x2})));
      }
    }
    const long long gain = run.gains[static_cast<std::size_t>(ev.time_label - 1)] + run.gains[next];
    t.check(best * best <= n * gain * gain, inst, [&] {
      return describe({{"break round", ev.round}, {"next round", next_round}, {"cooldown", cooldown},
                       {"max w({x,x'})", best}, {"gain(u_hat)+gain(u')", gain}, {"n", n}});
    });
  });
}

// Protections per cycle: non-root members only.
std::map<int, int> protections_per_cycle(const CactusDecomposition& d, const std::vector<Vertex>& protected_list) {
  std::map<int, int> out;
  for (int c = 0; c < static_cast<int>(d.cycles.size()); ++c) {
    const auto& cyc = d.cycles[static_cast<std::size_t>(c)];
    for (Vertex v : protected_list) {
      if (v != d.root && std::find(cyc.begin(), cyc.end(), v) != cyc.end()) ++out[c];
    }
  }
  return out;
}

void normalization_preserves_profit(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    Instance inst = cactus_instance(rng, 3, o.n_max, false, 6);
    const auto schedule = random_play(inst, rng);
    const auto normalized = normalize_nonredundant(inst, schedule);
    const int before = replay(inst, schedule).profit;
    const int after = replay(inst, normalized).profit;
    std::vector<Vertex> kept;
    for (const auto& p : normalized) kept.push_back(p.vertex);
    int worst = 0;
    for (auto [c, k] : protections_per_cycle(validate_and_decompose(inst.graph), kept)) worst = std::max(worst, k);
    t.check(before == after && worst <= 2, inst, [&] {
      return describe({{"profit before", before}, {"profit after", after}, {"max protections on a cycle", worst}});
    });
    if (inst.num_vertices() <= 10) {
      const auto opt = solve_opt(inst);
      const int again = replay(inst, normalize_nonredundant(inst, opt.schedule)).profit;
      t.check(again == opt.value, inst, [&] { return describe({{"opt", opt.value}, {"normalized replay", again}}); });
    }
  }
}

void cycle_respecting_coverage(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 4, std::min(o.n_max, 15), false);
    const Graph& g = inst.graph;
    const auto d = validate_and_decompose(g);
    const auto opt = solve_opt(inst);
    VertexSet all(g.num_vertices());
    std::map<int, VertexSet> parts;  // key: owning cycle, or -1 - v for singletons
    for (const auto& p : opt.schedule) {
      all.insert(p.vertex);
      int owner = -1 - p.vertex;
      for (int c : d.vertex_cycles[static_cast<std::size_t>(p.vertex)]) {
        if (d.cycles[static_cast<std::size_t>(c)].front() != p.vertex) owner = c;
      }
      parts.try_emplace(owner, g.num_vertices()).first->second.insert(p.vertex);
    }
    VertexSet unions(g.num_vertices());
    for (const auto& [_, part] : parts) unions |= covered_set(g, part);
    t.check(unions == covered_set(g, all), inst, [&] {
      return describe({{"|kappa(Psi)|", covered_set(g, all).size()}, {"|union|", unions.size()}});
    });
  }
}

void opt_dominance(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    Instance inst = cactus_instance(rng, 3, o.n_max, false);
    if (i % 3 == 1) inst.graph = random_tree(inst.num_vertices(), rng());
    if (i % 3 == 2 && inst.num_vertices() >= 4) inst.graph = random_one_almost_tree(inst.num_vertices(), 8, rng(), rng() % 2);
    const auto klass = validate_and_decompose(inst.graph).class_tag;
    const int opt = solve_opt(inst).value;
    for (auto kind : kinds_for(klass)) {
      const int alg = run_algorithm(inst, kind).profit;
      t.check(alg <= opt, inst, [&] {
        return std::string(to_string(kind)) + "\n" + describe({{"alg", alg}, {"opt", opt}});
      });
    }
  }
}

void alge_3competitive(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  double worst = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = random_instance_for(AlgorithmKind::AlgE, o.n_max, rng());
    try {
      const auto row = ratio_report(inst, AlgorithmKind::AlgE);
      worst = std::max(worst, row.ratio);
      t.check(row.bound_satisfied, inst, [&] {
        return describe({{"alg", row.alg_profit}, {"opt", row.opt_profit}});
      });
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
      ++r.skipped;
    }
  }
  r.max_ratio = worst;
}

void algc_three_per_cycle(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = i % 2 ? heavy_cycle_cactus(rng, 5, std::max(o.n_max, 5)) : cactus_instance(rng, 3, o.n_max, false);
    const auto run = run_algorithm(inst, AlgorithmKind::AlgC);
    std::vector<Vertex> placed;
    for (const auto& e : run.trace) placed.push_back(e.vertex);
    for (auto [c, k] : protections_per_cycle(validate_and_decompose(inst.graph), placed)) {
      t.check(k <= 3, inst, [&, c = c, k = k] { return describe({{"cycle", c}, {"protections", k}}); });
    }
  }
}

void view_vs_status(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, std::max(o.n_max, 15), false);
    ProtectionSchedule schedule;
    if (i % 2 == 0) {
      schedule = random_play(inst, rng);
    } else {
      schedule = schedule_from_trace(run_algorithm(inst, i % 4 == 1 ? AlgorithmKind::AlgC : AlgorithmKind::AlgE).trace);
    }
    const auto played = replay(inst, schedule);
    const int quotient = oracle::view_only_profit(inst, schedule);
    VertexSet psi(inst.num_vertices());
    for (const auto& p : schedule) psi.insert(p.vertex);
    const int covered = weight(inst.graph, psi);
    t.check(played.profit == quotient && played.profit == covered, inst, [&] {
      return describe({{"status profit", played.profit}, {"quotient profit", quotient}, {"|kappa(Psi)|", covered}});
    });
  }
}

void memo_vs_plain(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, std::min(o.n_max, 10), false);
    SolverOptions plain;
    plain.memoize = false;
    const int a = solve_opt(inst).value;
    const int b = solve_opt(inst, plain).value;
    t.check(a == b, inst, [&] { return describe({{"memoized", a}, {"plain", b}}); });
  }
}

void opt_brute_force(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, std::min(o.n_max, 8), false, 3);
    const auto opt = solve_opt(inst);
    const int brute = oracle::brute_force_opt(inst);
    const int witnessed = replay(inst, opt.schedule).profit;
    t.check(opt.value == brute && witnessed == opt.value, inst, [&] {
      return describe({{"solver", opt.value}, {"brute force", brute}, {"schedule replay", witnessed}});
    });
  }
}

void trace_determinism(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, o.n_max, false);
    for (auto kind : kinds_for(validate_and_decompose(inst.graph).class_tag)) {
      const bool same = run_algorithm(inst, kind).trace == run_algorithm(inst, kind).trace;
      t.check(same, inst, [&] { return std::string(to_string(kind)); });
    }
  }
}

void status_machine(const SuiteOptions& o, SuiteResult& r) {
  std::mt19937_64 rng(o.seed);
  Trial t(o, r);
  for (int i = 0; i < o.trials; ++i) {
    const Instance inst = cactus_instance(rng, 2, o.n_max, false);
    const auto schedule = random_play(inst, rng);
    GameState state(inst);
    std::vector<VertexStatus> before(static_cast<std::size_t>(inst.num_vertices()));
    std::size_t next = 0;
    while (!state.is_finished() || next < schedule.size()) {
      for (Vertex v = 0; v < inst.num_vertices(); ++v) before[static_cast<std::size_t>(v)] = state.status(v);
      for (; next < schedule.size() && schedule[next].round == state.round(); ++next) state.protect(schedule[next].vertex);
      state.spread();
      bool ok = true;
      for (Vertex v = 0; v < inst.num_vertices(); ++v) {
        const auto was = before[static_cast<std::size_t>(v)];
        ok &= was == VertexStatus::Available || state.status(v) == was;
      }
      t.check(ok, inst, [&] { return describe({{"round", state.round() - 1}}); });
    }
  }
}

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"count-monotone", count_monotone},
      {"covered-superset", covered_superset},
      {"edge-count-identity", edge_count_identity},
      {"covered-set-oracle", covered_set_oracle},
      {"neighbors-are-the-best", neighbors_are_the_best},
      {"break-cycle-quality", break_cycle_quality},
      {"improved-break-feasibility", improved_break_feasibility},
      {"secured-alternative-break", secured_alternative_break},
      {"cooldown-quality", cooldown_quality},
      {"normalization-preserves-profit", normalization_preserves_profit},
      {"cycle-respecting-coverage", cycle_respecting_coverage},
      {"opt-dominance", opt_dominance},
      {"alge-3competitive", alge_3competitive},
      {"algc-three-per-cycle", algc_three_per_cycle},
      {"view-vs-status", view_vs_status},
      {"memo-vs-plain", memo_vs_plain},
      {"opt-brute-force", opt_brute_force},
      {"trace-determinism", trace_determinism},
      {"status-machine", status_machine},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteResult result;
    result.name = suite;
    result.trials = options.trials;
    fn(options, result);
    return result;
  }
  throw Error(ErrorCode::UnknownSuite, "no suite named '" + std::string(name) + "'");
}

}  // namespace firefight
