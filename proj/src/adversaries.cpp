#include "firefight/adversaries.hpp"

#include <limits>
#include <string>

#include "firefight/errors.hpp"

namespace firefight {

Graph make_tadpole(int alpha, int beta) {
  if (alpha < 2 || beta < 1) throw Error(ErrorCode::BadParams, "tadpole needs alpha >= 2 and beta >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < alpha; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, alpha);
  Vertex prev = 0;
  for (int j = 1; j <= beta; ++j) {
    edges.emplace_back(prev, alpha + j);
    prev = alpha + j;
  }
  return Graph(alpha + beta + 1, edges, 0);
}

Instance make_alge_tight(int beta) {
  if (beta < 1) throw Error(ErrorCode::BadParams, "beta must be at least 1");
  const AlgeTightIds id{beta};
  const int n = 6 * beta + 27;
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    auto v = [&](int i) { return side == 0 ? id.x(i) : id.y(i); };
    edges.emplace_back(0, v(1));
    for (int i = 1; i < 7; ++i) edges.emplace_back(v(i), v(i + 1));
    edges.emplace_back(v(7), 0);
  }
  Vertex next = 15;
  for (Vertex hub : {id.x(1), id.x(2), id.y(1), id.y(2)}) {
    for (int k = 0; k < beta; ++k) edges.emplace_back(hub, next++);
  }
  for (int i = 1; i <= beta + 6; ++i) {
    edges.emplace_back(i == 1 ? 0 : id.a(i - 1), id.a(i));
    edges.emplace_back(i == 1 ? 0 : id.b(i - 1), id.b(i));
  }
  return Instance{Graph(n, edges, 0), {2, 0, 0, 0, 4}, "alge-tight-" + std::to_string(beta)};
}

ProtectionSchedule alge_tight_witness(int beta) {
  const AlgeTightIds id{beta};
  return {{1, id.x(1)}, {1, id.y(1)}, {5, id.a(5)}, {5, id.b(5)}, {5, id.x(3)}, {5, id.y(3)}};
}

double profit_ratio(int opt, int alg) {
  if (alg == 0) return opt == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(opt) / alg;
}

bool AdversaryReport::meets_lower_bound() const {
  const long long b = beta;
  const long long opt = opt_profit;
  const long long alg = alg_profit;
  return opt >= b * alg || opt * (b + 1) >= b * b * alg;
}

AdversaryReport tadpole_adversary_run(AlgorithmKind kind, int beta, SolverOptions options) {
  if (beta < 2) throw Error(ErrorCode::BadParams, "beta must be at least 2");
  AdversaryReport report;
  report.kind = kind;
  report.beta = beta;
  report.alpha = beta * beta + 1;
  const Graph g = make_tadpole(report.alpha, beta);
  report.n = g.num_vertices();

  const auto probe = run_algorithm(Instance{g, {1}, "tadpole-probe"}, kind);
  const bool on_cycle = !probe.trace.empty() && probe.trace.front().round == 1 &&
                        probe.trace.front().vertex >= 1 && probe.trace.front().vertex <= report.alpha;
  report.first_protection = probe.trace.empty() ? -1 : probe.trace.front().vertex;
  report.branch = on_cycle || probe.trace.empty() ? TadpoleCase::StopAfterOne : TadpoleCase::OneMore;
  report.sequence = report.branch == TadpoleCase::StopAfterOne ? std::vector<int>{1} : std::vector<int>{1, 1};

  const Instance realized{g, report.sequence, "tadpole-" + std::to_string(beta)};
  report.alg_profit = run_algorithm(realized, kind).profit;
  options.max_vertices = std::max(options.max_vertices, report.n);
  report.opt_profit = solve_opt(realized, options).value;
  report.ratio = profit_ratio(report.opt_profit, report.alg_profit);
  return report;
}

}  // namespace firefight
