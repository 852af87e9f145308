// Acceptance checks. Prints one PASS/FAIL line per check; with an argument,
// runs only that criterion ("1", "2", "2-threshold", ..., "8").
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "firefight/adversaries.hpp"
#include "firefight/algorithms.hpp"
#include "firefight/harness.hpp"
#include "lemmas.hpp"

using namespace firefight;

namespace {

struct Line {
  bool pass = false;
  std::string text;
};

using Lines = std::vector<Line>;

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Lines tadpole_lower_bound() {
  Lines out;
  const auto start = std::chrono::steady_clock::now();
  for (auto kind : {AlgorithmKind::AlgA, AlgorithmKind::AlgC, AlgorithmKind::AlgE}) {
    bool ok = true;
    double worst = INFINITY;
    std::string detail;
    for (int beta = 2; beta <= 10; ++beta) {
      const auto r = tadpole_adversary_run(kind, beta);
      worst = std::min(worst, r.ratio / std::min<double>(beta, beta * beta / (beta + 1.0)));
      if (!r.meets_lower_bound()) {
        ok = false;
        detail += fmt(" beta=%d alg=%d opt=%d", beta, r.alg_profit, r.opt_profit);
      }
      if (beta == 10) detail += fmt(" beta=10 ratio=%.3f case=%d", r.ratio, static_cast<int>(r.branch));
    }
    out.push_back({ok, fmt("tadpole lower bound %s, beta 2..10:%s (min ratio/bound %.3f)",
                           std::string(to_string(kind)).c_str(), detail.c_str(), worst)});
  }
  const double t = seconds_since(start);
  out.push_back({t < 5.0, fmt("tadpole runs finished in %.2f s (limit 5 s)", t)});
  return out;
}

Lines alge_tightness() {
  Lines out;
  for (int beta : {4, 10, 20}) {
    const Instance inst = make_alge_tight(beta);
    const int alg = run_algorithm(inst, AlgorithmKind::AlgE).profit;
    const int witness = replay(inst, alge_tight_witness(beta)).profit;
    const double ratio = static_cast<double>(witness) / alg;
    const double expected = (6.0 * beta + 10.0) / (2.0 * beta + 12.0);
    out.push_back({alg == 2 * beta + 12, fmt("tight instance beta=%d: alg-e profit %d (expected %d)", beta, alg,
                                             2 * beta + 12)});
    out.push_back({witness == 6 * beta + 10, fmt("tight instance beta=%d: witness schedule saves %d (expected %d)",
                                                 beta, witness, 6 * beta + 10)});
    out.push_back({std::abs(ratio - expected) <= 1e-12,
                   fmt("tight instance beta=%d: ratio %.15f vs %.15f", beta, ratio, expected)});
  }
  return out;
}

Lines alge_threshold() {
  const int beta = 20;
  const Instance inst = make_alge_tight(beta);
  const int alg = run_algorithm(inst, AlgorithmKind::AlgE).profit;
  const int witness = replay(inst, alge_tight_witness(beta)).profit;
  const double ratio = static_cast<double>(witness) / alg;
  return {{ratio >= 2.69, fmt("tight instance beta=20: ratio %.6f >= 2.69", ratio)}};
}

Lines batch_check(AlgorithmKind kind, int trials, std::uint64_t seed, const char* label, double time_limit = 0) {
  BatchSpec spec;
  spec.kind = kind;
  spec.trials = trials;
  spec.n_max = 14;
  spec.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  const auto s = run_ratio_batch(spec);
  const double t = seconds_since(start);
  const int rows = static_cast<int>(s.rows.size());
  Lines out;
  out.push_back({rows >= 200 && s.violations == 0,
                 fmt("%s: %d instances (n <= 14, %d skipped), %d bound violations, max ratio %.4f", label, rows,
                     s.skipped, s.violations, s.max_ratio)});
  if (time_limit > 0) out.push_back({t < time_limit, fmt("%s finished in %.2f s (limit %.0f s)", label, t, time_limit)});
  return out;
}

Lines alge_bound() { return batch_check(AlgorithmKind::AlgE, 240, 301, "alg-e vs opt, even sequences, ratio <= 3", 120); }

Lines alga_algc_bounds() {
  Lines out = batch_check(AlgorithmKind::AlgA, 240, 401, "alg-a vs opt on 1-almost trees, ratio <= 6 sqrt(n) + 1");
  const Lines c = batch_check(AlgorithmKind::AlgC, 240, 402, "alg-c vs opt on cacti, ratio <= 15 sqrt(n) + 1");
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

Lines greedy_bound() { return batch_check(AlgorithmKind::GreedyTree, 240, 501, "greedy vs opt on trees, ratio <= 2"); }

Line suite_line(const std::string& name, int trials, std::uint64_t seed, int n_max) {
  SuiteOptions o;
  o.trials = trials;
  o.seed = seed;
  o.n_max = n_max;
  const auto r = run_suite(name, o);
  std::string text = fmt("%s: %d trials, %lld checks, %d failures", name.c_str(), r.trials, r.checks, r.failures);
  if (r.max_ratio) text += fmt(", max ratio %.4f", *r.max_ratio);
  if (!r.passed()) text += "\n" + r.counterexample;
  return {r.passed(), text};
}

Lines lemma_suites() {
  Lines out;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t seed = 601;
  for (const auto& name : suite_names()) out.push_back(suite_line(name, 1000, seed++, 14));
  const double t = seconds_since(start);
  out.push_back({t < 180.0, fmt("property suites finished in %.2f s (limit 180 s)", t)});
  return out;
}

Lines oracle_equivalences() {
  return {suite_line("covered-set-oracle", 500, 701, 9), suite_line("view-vs-status", 500, 702, 14),
          suite_line("memo-vs-plain", 100, 703, 10)};
}

Lines determinism() {
  Lines out;
  for (auto kind : {AlgorithmKind::GreedyTree, AlgorithmKind::AlgA, AlgorithmKind::AlgC, AlgorithmKind::AlgE}) {
    BatchSpec spec;
    spec.kind = kind;
    spec.trials = 60;
    spec.seed = 801;
    std::ostringstream a, b;
    run_ratio_batch(spec, &a);
    run_ratio_batch(spec, &b);
    const bool same = a.str() == b.str() && !a.str().empty();
    out.push_back({same, fmt("%s: two batches with seed 801 give identical json-lines (%zu bytes)",
                             std::string(to_string(kind)).c_str(), a.str().size())});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Lines()>>> criteria{
      {"1", tadpole_lower_bound}, {"2", alge_tightness},       {"2-threshold", alge_threshold},
      {"3", alge_bound},          {"4", alga_algc_bounds},     {"5", greedy_bound},
      {"6", lemma_suites},        {"7", oracle_equivalences},  {"8", determinism},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  bool all = true;
  bool ran = false;
  for (const auto& [id, check] : criteria) {
    if (!only.empty() && only != id) continue;
    ran = true;
    for (const auto& line : check()) {
      all &= line.pass;
      std::cout << (line.pass ? "PASS" : "FAIL") << " [" << id << "] " << line.text << '\n';
    }
  }
  if (!ran) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return all ? 0 : 1;
}
