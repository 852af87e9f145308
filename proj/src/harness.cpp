#include "firefight/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>

#include "json.hpp"

#include "firefight/adversaries.hpp"
#include "firefight/errors.hpp"
#include "firefight/generators.hpp"

namespace firefight {

std::optional<double> competitive_bound(AlgorithmKind kind, GraphClass graph_class, int n,
                                        const std::vector<int>& sequence) {
  const double root_n = std::sqrt(static_cast<double>(n));
  switch (kind) {
    case AlgorithmKind::GreedyTree:
      if (graph_class == GraphClass::Tree) return 2.0;
      return std::nullopt;
    case AlgorithmKind::AlgA:
      if (graph_class == GraphClass::Cactus) return std::nullopt;
      return 6.0 * root_n + 1.0;
    case AlgorithmKind::AlgC: return 15.0 * root_n + 1.0;
    case AlgorithmKind::AlgE:
      for (int f : sequence) {
        if (f % 2 != 0) return std::nullopt;
      }
      return 3.0;
  }
  return std::nullopt;
}

RatioReport ratio_report(const Instance& instance, AlgorithmKind kind, const SolverOptions& solver) {
  const auto start = std::chrono::steady_clock::now();
  RatioReport r;
  r.instance = instance.name;
  r.n = instance.num_vertices();
  r.class_tag = validate_and_decompose(instance.graph).class_tag;
  r.kind = kind;
  r.alg_profit = run_algorithm(instance, kind).profit;
  r.opt_profit = solve_opt(instance, solver).value;
  r.ratio = profit_ratio(r.opt_profit, r.alg_profit);
  r.bound = competitive_bound(kind, r.class_tag, r.n, instance.sequence);
  r.bound_satisfied = !r.bound || r.opt_profit == 0 || r.ratio <= *r.bound + 1e-9;
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string to_json_line(const RatioReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["class"] = to_string(r.class_tag);
  j["algorithm"] = to_string(r.kind);
  j["alg_profit"] = r.alg_profit;
  j["opt_profit"] = r.opt_profit;
  if (std::isinf(r.ratio)) {
    j["ratio"] = "inf";
  } else {
    j["ratio"] = r.ratio;
  }
  j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
  j["bound_satisfied"] = r.bound_satisfied;
  return j.dump();
}

void write_table(std::ostream& out, const std::vector<RatioReport>& rows) {
  out << std::left << std::setw(28) << "instance" << std::setw(5) << "n" << std::setw(17) << "class"
      << std::setw(12) << "algorithm" << std::right << std::setw(5) << "alg" << std::setw(5) << "opt"
      << std::setw(9) << "ratio" << std::setw(9) << "bound" << std::setw(4) << "ok" << std::setw(10) << "ms"
      << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(28) << r.instance << std::setw(5) << r.n << std::setw(17) << to_string(r.class_tag)
        << std::setw(12) << to_string(r.kind) << std::right << std::setw(5) << r.alg_profit << std::setw(5)
        << r.opt_profit << std::setw(9) << std::fixed << std::setprecision(3) << r.ratio << std::setw(9);
    if (r.bound) {
      out << *r.bound;
    } else {
      out << "-";
    }
    out << std::setw(4) << (r.bound_satisfied ? "yes" : "NO") << std::setw(10) << std::setprecision(2)
        << r.runtime_ms << '\n';
    out << std::defaultfloat;
  }
}

Instance random_instance_for(AlgorithmKind kind, int n_max, std::uint64_t seed) {
  if (n_max < 4) throw Error(ErrorCode::BadParams, "n_max must be at least 4");
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const std::uint64_t graph_seed = rng();
  const std::uint64_t seq_seed = rng();
  Instance inst;
  switch (kind) {
    case AlgorithmKind::GreedyTree: inst.graph = random_tree(pick(2, n_max), graph_seed); break;
    case AlgorithmKind::AlgA:
      inst.graph = random_one_almost_tree(pick(4, n_max), 8, graph_seed, rng() % 2 == 0);
      break;
    case AlgorithmKind::AlgC:
    case AlgorithmKind::AlgE: inst.graph = random_cactus(pick(3, n_max), 0.6, 8, graph_seed); break;
  }
  const int length = pick(1, 4);
  if (kind == AlgorithmKind::AlgE) {
    inst.sequence = random_sequence(length, 2 * pick(1, 3), true, seq_seed);
  } else {
    inst.sequence = random_sequence(length, pick(1, 4), false, seq_seed);
  }
  inst.name = std::string(to_string(kind)) + "-" + std::to_string(seed);
  return inst;
}

BatchSummary run_ratio_batch(const BatchSpec& spec, std::ostream* json_out) {
  BatchSummary summary;
  std::mt19937_64 rng(spec.seed);
  for (int t = 0; t < spec.trials; ++t) {
    const Instance inst = random_instance_for(spec.kind, spec.n_max, rng());
    try {
      RatioReport row = ratio_report(inst, spec.kind, spec.solver);
      if (!row.bound_satisfied) ++summary.violations;
      summary.max_ratio = std::max(summary.max_ratio, row.ratio);
      if (json_out) *json_out << to_json_line(row) << '\n';
      summary.rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
      ++summary.skipped;
    }
  }
  return summary;
}

std::uint64_t node_budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("FIREFIGHT_NODE_BUDGET");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw Error(ErrorCode::BadParams, "FIREFIGHT_NODE_BUDGET must be a positive integer");
  return value;
}

}  // namespace firefight
