#pragma once

#include <vector>

#include "firefight/algorithms.hpp"
#include "firefight/exact_opt.hpp"
#include "firefight/game.hpp"

namespace firefight {

// Cycle 0-1-...-alpha-0 and path 0-(alpha+1)-...-(alpha+beta); root 0.
Graph make_tadpole(int alpha, int beta);

// Two 8-cycles through the root, beta pendants on x1, x2, y1, y2, and two
// paths of beta+6 vertices; sequence (2,0,0,0,4).
// Ids: r = 0, x1..x7 = 1..7, y1..y7 = 8..14, pendants of x1, x2, y1, y2 in
// that order, then a1..a_{beta+6}, then b1..b_{beta+6}.
Instance make_alge_tight(int beta);

struct AlgeTightIds {
  int beta = 0;
  Vertex x(int i) const { return i; }
  Vertex y(int i) const { return 7 + i; }
  Vertex a(int i) const { return 14 + 4 * beta + i; }
  Vertex b(int i) const { return 14 + 4 * beta + beta + 6 + i; }
};

// Saves 6*beta + 10 on make_alge_tight(beta).
ProtectionSchedule alge_tight_witness(int beta);

enum class TadpoleCase { StopAfterOne = 1, OneMore = 2 };

struct AdversaryReport {
  AlgorithmKind kind = AlgorithmKind::AlgA;
  int beta = 0;
  int alpha = 0;
  int n = 0;
  int alg_profit = 0;
  int opt_profit = 0;
  double ratio = 0.0;  // +inf when alg_profit = 0
  TadpoleCase branch = TadpoleCase::StopAfterOne;
  std::vector<int> sequence;
  Vertex first_protection = -1;

  // ratio >= min(beta, beta^2 / (beta + 1)), in integers.
  bool meets_lower_bound() const;
};

// Plays the tadpole(beta^2+1, beta) adversary against `kind`.
AdversaryReport tadpole_adversary_run(AlgorithmKind kind, int beta, SolverOptions options = {});

double profit_ratio(int opt, int alg);

}  // namespace firefight
