#pragma once

#include <cstdint>

#include "firefight/game.hpp"

namespace firefight {

struct SolverOptions {
  int max_vertices = 22;
  std::int64_t node_budget = 50'000'000;
  bool memoize = true;
};

struct OptResult {
  int value = 0;
  ProtectionSchedule schedule;
  std::int64_t nodes_explored = 0;
};

// Exhaustive search over per-round protection sets. Throws GraphTooLarge or
// SearchBudgetExceeded.
OptResult solve_opt(const Instance& instance, const SolverOptions& options = {});

// Drops redundant protections until every cycle carries at most two. Throws
// InvalidSchedule when the input schedule is not legal.
ProtectionSchedule normalize_nonredundant(const Instance& instance, const ProtectionSchedule& schedule);

// Cheap bound: n - 1 minus the root neighbours that must burn in round 1.
int opt_upper_bound(const Instance& instance);

}  // namespace firefight
