#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "firefight/algorithms.hpp"
#include "firefight/exact_opt.hpp"

namespace firefight {

struct RatioReport {
  std::string instance;
  int n = 0;
  GraphClass class_tag = GraphClass::Tree;
  AlgorithmKind kind = AlgorithmKind::AlgC;
  int alg_profit = 0;
  int opt_profit = 0;
  double ratio = 1.0;           // +inf when alg_profit = 0 < opt_profit
  std::optional<double> bound;  // competitive bound that applies, if any
  bool bound_satisfied = true;
  double runtime_ms = 0.0;
};

// 2 (greedy on trees), 6 sqrt(n) + 1 (alg-a), 15 sqrt(n) + 1 (alg-c),
// 3 (alg-e with an all-even sequence); nullopt otherwise.
std::optional<double> competitive_bound(AlgorithmKind kind, GraphClass graph_class, int n,
                                        const std::vector<int>& sequence);

// Throws WrongGraphClass, GraphTooLarge, SearchBudgetExceeded.
RatioReport ratio_report(const Instance& instance, AlgorithmKind kind, const SolverOptions& solver = {});

// One JSON object per line with a fixed field order. Timing is left out so
// that reruns are byte-identical.
std::string to_json_line(const RatioReport& report);
void write_table(std::ostream& out, const std::vector<RatioReport>& rows);

// Random instance from the class the algorithm is analysed on (trees for
// greedy-tree, 1-almost trees for alg-a, cacti otherwise; even sequences for
// alg-e).
Instance random_instance_for(AlgorithmKind kind, int n_max, std::uint64_t seed);

struct BatchSpec {
  AlgorithmKind kind = AlgorithmKind::AlgC;
  int trials = 200;
  int n_max = 14;
  std::uint64_t seed = 1;
  SolverOptions solver;
};

struct BatchSummary {
  std::vector<RatioReport> rows;
  int skipped = 0;  // solver budget exhausted
  int violations = 0;
  double max_ratio = 0.0;
};

// Rows are streamed to json_out (when given) in trial order.
BatchSummary run_ratio_batch(const BatchSpec& spec, std::ostream* json_out = nullptr);

std::uint64_t node_budget_from_env(std::uint64_t fallback);

}  // namespace firefight
