#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "firefight/cactus.hpp"
#include "firefight/game.hpp"
#include "firefight/graph.hpp"

namespace firefight {

enum class AlgorithmKind { GreedyTree, AlgA, AlgC, AlgE };

std::string_view to_string(AlgorithmKind kind);
std::optional<AlgorithmKind> parse_algorithm(std::string_view name);

enum class PlacementReason { Greedy, CyclePair, BreakCycle, ImprovedBreak };

std::string_view to_string(PlacementReason reason);

// Square-root thresholds are compared exactly: w >= sqrt(x) iff w*w >= x.
struct SqrtOf {
  long long radicand = 0;
};

inline bool at_least_sqrt(long long value, SqrtOf t) { return value >= 0 && value * value >= t.radicand; }
int ceil_sqrt(long long x);

struct Placement {
  Vertex vertex = 0;  // id in the view's parent graph
  PlacementReason reason = PlacementReason::Greedy;
  int gain = 0;  // vertices newly covered by this placement
};

struct ImprovedBreakResult {
  Vertex vertex = 0;  // u-hat, local id in the view
  int cooldown = 0;
  int d_max = 0;
  Vertex u_star = 0;
  int cycle = 0;           // index of the broken cycle in the view's decomposition
  int heaviest_cycle = 0;  // index of the heaviest root cycle
  int threshold = 0;       // ceil(sqrt(w(heaviest root cycle)))
};

struct CooldownOrigin {
  int time_label = 0;  // filled in by run_algorithm
  Vertex vertex = 0;
  std::vector<Vertex> cycle;
};

struct CooldownState {
  int remaining = 0;
  std::optional<CooldownOrigin> origin;
};

// Snapshot of a cycle break, kept for the structural property checks.
struct BreakEvent {
  Subgraph view;  // the graph the decision was made on
  int cycle = 0;
  Vertex vertex = 0;  // local id in view.graph
  PlacementReason reason = PlacementReason::BreakCycle;
  std::optional<ImprovedBreakResult> improved;
  int placement_index = 0;
  int round = 0;
  int time_label = 0;
};

struct RoundOutcome {
  std::vector<Placement> placements;
  CooldownState cooldown;
  std::vector<BreakEvent> breaks;
  std::vector<std::string> diagnostics;
};

// Round deciders. Each one only sees the reduced view (root at local id 0)
// and re-reduces it after every placement within the round.
RoundOutcome greedy_tree_round(const Subgraph& view, int f);
RoundOutcome alg_a_round(const Subgraph& view, const CactusDecomposition& decomp, int f);
ImprovedBreakResult improved_break(const Graph& view, const CactusDecomposition& decomp, SqrtOf eta);
RoundOutcome alg_c_round(const Subgraph& view, const CactusDecomposition& decomp, int f, CooldownState cooldown,
                         int n_original);
RoundOutcome alg_e_round(const Subgraph& view, const CactusDecomposition& decomp, int f);

struct RunOptions {
  bool record_views = false;
};

struct RunResult {
  int profit = 0;
  Trace trace;
  std::vector<PlacementReason> reasons;  // parallel to trace
  std::vector<int> gains;                // parallel to trace
  std::vector<BreakEvent> breaks;
  std::vector<Subgraph> round_views;  // view at the start of round i+1, when recorded
  std::vector<std::string> diagnostics;
};

bool accepts(AlgorithmKind kind, GraphClass graph_class);

// Throws WrongGraphClass when the instance is outside the algorithm's class.
RunResult run_algorithm(const Instance& instance, AlgorithmKind kind, const RunOptions& options = {});

}  // namespace firefight
