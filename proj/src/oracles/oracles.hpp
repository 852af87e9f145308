#pragma once

#include "firefight/game.hpp"
#include "firefight/graph.hpp"

// Slow, independent reference implementations used to cross-check the
// library. Exponential in places; keep inputs small.
namespace firefight::oracle {

// kappa(s) by enumerating every simple path that starts at the root.
VertexSet covered_set_by_paths(const Graph& g, const VertexSet& s);

// Number of simple cycles, by exhaustive search.
int count_simple_cycles(const Graph& g);

// Plays the schedule on explicit quotient graphs: burned vertices merged
// into the root, saved vertices deleted every round. Returns the profit.
int view_only_profit(const Instance& instance, const ProtectionSchedule& schedule);

// Exhaustive search over every legal protection subset (any size up to f)
// driven through GameState.
int brute_force_opt(const Instance& instance);

}  // namespace firefight::oracle
