// firefight: command-line front end for the online firefighting library.
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "firefight/adversaries.hpp"
#include "firefight/algorithms.hpp"
#include "firefight/errors.hpp"
#include "firefight/exact_opt.hpp"
#include "firefight/generators.hpp"
#include "firefight/harness.hpp"
#include "firefight/instance_io.hpp"
#include "lemmas.hpp"

namespace ff = firefight;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string instance;
  std::string alg = "alg-c";
  std::string format = "json-lines";
  std::string out;
  std::string suite = "all";
  std::string generator = "cactus";
  std::string sequence;
  int beta = 3;
  int alpha = 0;
  int trials = 200;
  int n_max = 14;
  int n = 10;
  int max_cycle_len = 8;
  double cycle_fraction = 0.5;
  bool through_root = false;
  std::uint64_t seed = 1;
};

ff::AlgorithmKind algorithm(const Options& o) {
  const auto kind = ff::parse_algorithm(o.alg);
  if (!kind) throw CLI::ValidationError("--alg", "unknown algorithm '" + o.alg + "'");
  return *kind;
}

ff::SolverOptions solver_options() {
  ff::SolverOptions s;
  s.node_budget = static_cast<std::int64_t>(ff::node_budget_from_env(static_cast<std::uint64_t>(s.node_budget)));
  return s;
}

bool json_lines(const Options& o) { return o.format == "json-lines"; }

json schedule_json(const ff::ProtectionSchedule& schedule) {
  json out = json::array();
  for (const auto& p : schedule) out.push_back({{"round", p.round}, {"vertex", p.vertex}});
  return out;
}

std::string ratio_string(double r) {
  if (std::isinf(r)) return "inf";
  std::ostringstream s;
  s << r;
  return s.str();
}

int cmd_run(const Options& o) {
  const auto inst = ff::read_instance_file(o.instance);
  const auto kind = algorithm(o);
  const auto result = ff::run_algorithm(inst, kind);
  if (json_lines(o)) {
    json trace = json::array();
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
      const auto& e = result.trace[i];
      trace.push_back({{"time", e.time_label}, {"round", e.round}, {"vertex", e.vertex},
                       {"reason", ff::to_string(result.reasons[i])}, {"gain", result.gains[i]}});
    }
    json row{{"instance", inst.name}, {"algorithm", ff::to_string(kind)}, {"profit", result.profit}, {"trace", trace}};
    std::cout << row.dump() << '\n';
  } else {
    std::cout << "profit " << result.profit << '\n';
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
      const auto& e = result.trace[i];
      std::cout << "  t=" << e.time_label << " round " << e.round << " protect " << e.vertex << " ("
                << ff::to_string(result.reasons[i]) << ", +" << result.gains[i] << ")\n";
    }
  }
  for (const auto& d : result.diagnostics) std::cerr << "note: " << d << '\n';
  return kExitOk;
}

int cmd_opt(const Options& o) {
  const auto inst = ff::read_instance_file(o.instance);
  const auto opt = ff::solve_opt(inst, solver_options());
  if (json_lines(o)) {
    json row{{"instance", inst.name}, {"opt", opt.value}, {"schedule", schedule_json(opt.schedule)},
             {"nodes", opt.nodes_explored}};
    std::cout << row.dump() << '\n';
  } else {
    std::cout << "opt " << opt.value << " (" << opt.nodes_explored << " nodes)\n";
    for (const auto& p : opt.schedule) std::cout << "  round " << p.round << " protect " << p.vertex << '\n';
  }
  return kExitOk;
}

int cmd_ratio(const Options& o) {
  const auto kind = algorithm(o);
  std::vector<ff::RatioReport> rows;
  int violations = 0;
  std::ostream* machine = json_lines(o) ? &std::cout : nullptr;
  std::ostream& human = json_lines(o) ? std::cerr : std::cout;
  if (!o.instance.empty()) {
    rows.push_back(ff::ratio_report(ff::read_instance_file(o.instance), kind, solver_options()));
    if (machine) *machine << ff::to_json_line(rows.back()) << '\n';
    violations = rows.back().bound_satisfied ? 0 : 1;
  } else {
    ff::BatchSpec spec;
    spec.kind = kind;
    spec.trials = o.trials;
    spec.n_max = o.n_max;
    spec.seed = o.seed;
    spec.solver = solver_options();
    auto batch = ff::run_ratio_batch(spec, machine);
    rows = std::move(batch.rows);
    violations = batch.violations;
    if (batch.skipped > 0) human << batch.skipped << " instance(s) skipped: solver budget exhausted\n";
  }
  ff::write_table(human, rows);
  return violations == 0 ? kExitOk : kExitProperty;
}

int cmd_adversary(const Options& o) {
  const auto kind = algorithm(o);
  auto solver = solver_options();
  const auto report = ff::tadpole_adversary_run(kind, o.beta, solver);
  json row{{"algorithm", ff::to_string(kind)},
           {"beta", report.beta},
           {"alpha", report.alpha},
           {"n", report.n},
           {"case", static_cast<int>(report.branch)},
           {"sequence", report.sequence},
           {"first_protection", report.first_protection},
           {"alg_profit", report.alg_profit},
           {"opt_profit", report.opt_profit},
           {"ratio", ratio_string(report.ratio)},
           {"lower_bound_met", report.meets_lower_bound()}};
  if (json_lines(o)) {
    std::cout << row.dump() << '\n';
  } else {
    std::cout << ff::to_string(kind) << " beta=" << report.beta << " case " << static_cast<int>(report.branch)
              << ": alg " << report.alg_profit << ", opt " << report.opt_profit << ", ratio "
              << ratio_string(report.ratio) << (report.meets_lower_bound() ? "" : "  (below lower bound)") << '\n';
  }
  return report.meets_lower_bound() ? kExitOk : kExitProperty;
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      const int f = std::stoi(item);
      if (f < 0) throw std::invalid_argument(item);
      out.push_back(f);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sequence", "expected comma-separated nonnegative integers");
    }
  }
  return out;
}

int cmd_gen(const Options& o) {
  ff::Instance inst;
  if (o.generator == "tadpole") {
    const int alpha = o.alpha > 0 ? o.alpha : o.beta * o.beta + 1;
    inst.graph = ff::make_tadpole(alpha, o.beta);
    inst.name = "tadpole-" + std::to_string(alpha) + "-" + std::to_string(o.beta);
    inst.sequence = {1};
  } else if (o.generator == "alge-tight") {
    inst = ff::make_alge_tight(o.beta);
  } else if (o.generator == "cactus") {
    inst.graph = ff::random_cactus(o.n, o.cycle_fraction, o.max_cycle_len, o.seed);
    inst.name = "cactus-" + std::to_string(o.n) + "-" + std::to_string(o.seed);
  } else if (o.generator == "tree") {
    inst.graph = ff::random_tree(o.n, o.seed);
    inst.name = "tree-" + std::to_string(o.n) + "-" + std::to_string(o.seed);
  } else if (o.generator == "one-almost-tree") {
    inst.graph = ff::random_one_almost_tree(o.n, o.max_cycle_len, o.seed, o.through_root);
    inst.name = "one-almost-tree-" + std::to_string(o.n) + "-" + std::to_string(o.seed);
  } else {
    throw CLI::ValidationError("--generator", "unknown generator '" + o.generator + "'");
  }
  if (!o.sequence.empty()) inst.sequence = parse_sequence(o.sequence);
  if (inst.sequence.empty()) inst.sequence = {1};
  if (o.out.empty() || o.out == "-") {
    std::cout << ff::serialize_instance(inst);
  } else {
    ff::write_instance_file(o.out, inst);
  }
  return kExitOk;
}

int cmd_check_lemmas(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = ff::suite_names();
  } else {
    suites.push_back(o.suite);
  }
  bool all_passed = true;
  for (const auto& name : suites) {
    ff::SuiteOptions opts;
    opts.trials = o.trials;
    opts.seed = o.seed;
    opts.n_max = o.n_max;
    if (!o.out.empty()) opts.counterexample_path = suites.size() == 1 ? o.out : o.out + "." + name;
    const auto r = ff::run_suite(name, opts);
    all_passed &= r.passed();
    if (json_lines(o)) {
      json row{{"suite", r.name},       {"trials", r.trials},   {"checks", r.checks},
               {"failures", r.failures}, {"skipped", r.skipped}, {"passed", r.passed()}};
      if (r.max_ratio) row["max_ratio"] = *r.max_ratio;
      std::cout << row.dump() << '\n';
    } else {
      std::cout << (r.passed() ? "pass " : "FAIL ") << r.name << "  trials=" << r.trials << " checks=" << r.checks
                << " failures=" << r.failures << " vacuous=" << r.skipped << '\n';
    }
    if (!r.passed()) std::cerr << "first counterexample for " << r.name << ":\n" << r.counterexample;
  }
  return all_passed ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online firefighting on trees, 1-almost trees and cacti"};
  app.require_subcommand(1);
  Options o;

  auto add_alg = [&](CLI::App* cmd) {
    cmd->add_option("--alg", o.alg, "greedy-tree, alg-a, alg-c or alg-e")
        ->check(CLI::IsMember({"greedy-tree", "alg-a", "alg-c", "alg-e"}));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json-lines", "table"}));
  };

  auto* run = app.add_subcommand("run", "play one algorithm on an instance file");
  run->add_option("--instance", o.instance, "instance file")->required();
  add_alg(run);
  add_format(run);

  auto* opt = app.add_subcommand("opt", "exact offline optimum of an instance file");
  opt->add_option("--instance", o.instance, "instance file")->required();
  add_format(opt);

  auto* ratio = app.add_subcommand("ratio", "competitive ratio against the exact optimum");
  ratio->add_option("--instance", o.instance, "instance file (omit for a random batch)");
  add_alg(ratio);
  add_format(ratio);
  ratio->add_option("--trials", o.trials, "random instances")->check(CLI::PositiveNumber);
  ratio->add_option("--n-max", o.n_max, "largest random instance")->check(CLI::Range(4, 22));
  ratio->add_option("--seed", o.seed, "random seed");

  auto* adversary = app.add_subcommand("adversary", "tadpole lower-bound adversary");
  add_alg(adversary);
  add_format(adversary);
  adversary->add_option("--beta", o.beta, "path length")->check(CLI::Range(2, 12));

  auto* gen = app.add_subcommand("gen", "write an instance file");
  gen->add_option("--generator", o.generator, "cactus, tree, one-almost-tree, tadpole or alge-tight");
  gen->add_option("--n", o.n, "vertex count")->check(CLI::Range(2, 100000));
  gen->add_option("--cycle-fraction", o.cycle_fraction, "probability of hanging a cycle")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--max-cycle-len", o.max_cycle_len, "longest generated cycle");
  gen->add_flag("--through-root", o.through_root, "one-almost-tree: put the cycle on the root");
  gen->add_option("--alpha", o.alpha, "tadpole cycle size minus one (default beta^2+1)");
  gen->add_option("--beta", o.beta, "tadpole path length / tight-instance parameter");
  gen->add_option("--sequence", o.sequence, "firefighter sequence, e.g. 2,0,1");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "output path (default stdout)");

  auto* check = app.add_subcommand("check-lemmas", "randomized property suites");
  check->add_option("--suite", o.suite, "suite name or 'all'");
  check->add_option("--trials", o.trials, "trials per suite")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "random seed");
  check->add_option("--n-max", o.n_max, "largest random instance")->check(CLI::Range(4, 22));
  check->add_option("--out", o.out, "file for the first counterexample");
  add_format(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(o);
    if (*opt) return cmd_opt(o);
    if (*ratio) return cmd_ratio(o);
    if (*adversary) return cmd_adversary(o);
    if (*gen) return cmd_gen(o);
    if (*check) return cmd_check_lemmas(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ff::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ff::ErrorCode::SearchBudgetExceeded ? kExitBudget : kExitUsage;
  }
  return kExitUsage;
}
