#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <random>

#include "dopwalk/io.hpp"
#include "dopwalk/line_walk.hpp"
#include "dopwalk/oracle.hpp"

namespace {

using namespace dopwalk;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 2;
constexpr int kExitInvariantFailure = 3;

// Fixed seed so --collapse-each-step runs are reproducible byte for byte.
constexpr unsigned kCollapseSeed = 12345;

struct RunOptions {
  std::string config_path;
  std::string preset;
  std::optional<int> steps;
  int margin = 1;
  std::string format = "json";
  std::string output;
  bool dump_states = false;
  std::string dump_operator;  // "", "pi", "swap" or "u"
  bool check_invariants = false;
  bool collapse_each_step = false;
  double tolerance = kDefaultTol;
};

struct Instance {
  DirectedGraph graph;
  PairBasis basis;
  CoinFamily coins;
  DensityOperator initial;
  int steps = 0;
};

Instance build_from_config(const RunOptions& opt) {
  json cfg = json::parse(io::read_text_file(opt.config_path), nullptr, true);
  DirectedGraph graph = io::graph_from_json(cfg.at("graph"));
  CoinFamily coins = io::coin_family_from_json(cfg.at("coins"));
  PairBasis basis = pair_basis(graph);

  const json& init = cfg.at("initial");
  DensityOperator rho0 = [&] {
    if (init.contains("blocks")) {
      return io::state_from_json(init, coins.coin_dim, basis);
    }
    const json& coin = init.at("coin");
    auto re = coin.at("re").get<std::vector<double>>();
    auto im = coin.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw ConfigParseError("coin re/im mismatch");
    Vec u(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) u(i) = Complex(re[i], im[i]);
    const json& p = init.at("pair");
    return pure_density(u, {p.at(0).get<VertexId>(), p.at(1).get<VertexId>()},
                        basis);
  }();

  int steps = opt.steps.value_or(cfg.value("steps", 0));
  return Instance{std::move(graph), std::move(basis), std::move(coins),
                  std::move(rho0), steps};
}

Instance build_preset(const RunOptions& opt) {
  if (opt.preset != "paper-line") {
    throw ConfigParseError("unknown preset '" + opt.preset + "'");
  }
  int steps = opt.steps.value_or(0);
  DirectedGraph graph = line_window(required_radius(steps, opt.margin));
  CoinFamily coins = line_coin_family(graph);
  PairBasis basis = pair_basis(graph);
  DensityOperator rho0 = line_initial_state(basis);
  return Instance{std::move(graph), std::move(basis), std::move(coins),
                  std::move(rho0), steps};
}

void report_coin_violations(const DirectedGraph& g, const CoinFamily& f,
                            double tol) {
  auto report = validate_coin_family(g, f, tol);
  if (report.ok) return;
  std::cerr << "unital condition violated:\n";
  for (const auto& v : report.violations) {
    std::cerr << "  vertex " << v.vertex << " residual " << v.residual << "\n";
  }
  throw ValidationError("coin family rejected");
}

// Measure-and-collapse evolution: after each step, sample a pair from the
// diagonal-block probabilities and collapse onto it.
WalkTrajectory evolve_with_collapse(const WalkOperator& walk,
                                    const DensityOperator& rho0, int steps) {
  std::mt19937 rng(kCollapseSeed);
  WalkTrajectory traj;
  traj.step_count = static_cast<std::size_t>(steps);
  traj.states.push_back(rho0);
  for (int t = 0; t < steps; ++t) {
    DensityOperator next = step(walk, traj.states.back());
    std::vector<std::size_t> pairs;
    std::vector<double> weights;
    for (std::size_t p = 0; p < next.basis().size(); ++p) {
      double prob = effect_probability(next, next.basis().pair_at(p));
      if (prob > 1e-12) {
        pairs.push_back(p);
        weights.push_back(prob);
      }
    }
    std::discrete_distribution<std::size_t> pick(weights.begin(),
                                                 weights.end());
    traj.states.push_back(
        collapse(next, next.basis().pair_at(pairs[pick(rng)])));
  }
  return traj;
}

int check_invariants(const Instance& inst, const WalkOperator& walk,
                     const WalkTrajectory& traj, double tol) {
  bool ok = true;
  auto check = [&](const std::string& name, double residual, double limit) {
    bool pass = residual <= limit;
    ok = ok && pass;
    std::cerr << (pass ? "ok   " : "FAIL ") << name << " residual " << residual
              << " (limit " << limit << ")\n";
  };

  BlockOperator pi = build_projector(inst.graph, inst.coins, inst.basis);
  BlockOperator s = build_swap(inst.basis, inst.coins.coin_dim);
  auto eye = BlockOperator::identity(inst.coins.coin_dim, inst.basis);
  check("projector idempotent", pi.multiply(pi).max_abs_diff(pi), tol);
  check("projector hermitian", pi.adjoint().max_abs_diff(pi), tol);
  check("swap involution", s.multiply(s).max_abs_diff(eye), 0.0);
  check("walk unitarity",
        walk.u.adjoint().multiply(walk.u).max_abs_diff(eye), tol);

  for (std::size_t t = 0; t < traj.states.size(); ++t) {
    const DensityOperator& rho = traj.states[t];
    std::string tag = " at t=" + std::to_string(t);
    check("trace" + tag, std::abs(trace(rho) - 1.0), tol);
    check("hermiticity" + tag, rho.op.adjoint().max_abs_diff(rho.op), tol);
    check("effect completeness" + tag,
          std::abs(vertex_distribution(rho).total() - 1.0), tol);
  }
  auto diag = dopwalk::check_state(traj.final_state());
  check("final-state positivity", std::max(0.0, -diag.min_eigenvalue), 1e-8);
  return ok ? kExitOk : kExitInvariantFailure;
}

void emit(const RunOptions& opt, const std::string& content) {
  if (opt.output.empty()) {
    std::cout << content;
  } else {
    io::write_text_file(opt.output, content);
  }
}

int run(const RunOptions& opt) {
  Instance inst =
      opt.config_path.empty() ? build_preset(opt) : build_from_config(opt);
  report_coin_violations(inst.graph, inst.coins, opt.tolerance);
  WalkOperator walk =
      build_walk_unitary(inst.graph, inst.coins, inst.basis, opt.tolerance);

  if (!opt.dump_operator.empty()) {
    const BlockOperator* op = &walk.u;
    BlockOperator pi = build_projector(inst.graph, inst.coins, inst.basis);
    BlockOperator s = build_swap(inst.basis, inst.coins.coin_dim);
    if (opt.dump_operator == "pi") op = &pi;
    if (opt.dump_operator == "swap") op = &s;
    emit(opt, io::operator_to_json(*op).dump(2) + "\n");
    return kExitOk;
  }

  WalkTrajectory traj = opt.collapse_each_step
                            ? evolve_with_collapse(walk, inst.initial,
                                                   inst.steps)
                            : evolve(walk, inst.initial, inst.steps);
  std::vector<VertexDistribution> dists;
  for (const DensityOperator& rho : traj.states) {
    dists.push_back(vertex_distribution(rho));
  }

  if (opt.format == "csv") {
    emit(opt, io::distributions_to_csv(dists));
  } else {
    json records = json::array();
    for (std::size_t t = 0; t < dists.size(); ++t) {
      records.push_back(io::distribution_to_json(static_cast<int>(t),
                                                 dists[t]));
    }
    emit(opt, records.dump(2) + "\n");
  }

  if (opt.dump_states) {
    json states = json::array();
    for (const DensityOperator& rho : traj.states) {
      states.push_back(io::state_to_json(rho));
    }
    std::string path = opt.output.empty() ? "states.json"
                                          : opt.output + ".states.json";
    io::write_text_file(path, states.dump(2) + "\n");
  }

  if (opt.check_invariants) {
    return check_invariants(inst, walk, traj, opt.tolerance);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum walk simulation in the density operator picture"};
  app.require_subcommand(1);

  RunOptions opt;
  CLI::App* run_cmd = app.add_subcommand("run", "Build a walk instance, "
                                         "evolve it and emit distributions");
  auto* cfg = run_cmd->add_option("--config", opt.config_path,
                                  "Walk configuration JSON file");
  run_cmd->add_option("--preset", opt.preset, "Built-in instance (paper-line)")
      ->excludes(cfg);
  run_cmd->add_option("--steps", opt.steps, "Number of walk steps");
  run_cmd->add_option("--margin", opt.margin,
                      "Extra window radius beyond the light cone");
  run_cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("--output", opt.output, "Output path (default stdout)");
  run_cmd->add_flag("--dump-states", opt.dump_states,
                    "Also write every rho_t");
  run_cmd->add_option("--dump-operator", opt.dump_operator,
                      "Dump an operator instead of running")
      ->check(CLI::IsMember({"pi", "swap", "u"}));
  run_cmd->add_flag("--check-invariants", opt.check_invariants,
                    "Verify operator and state invariants");
  run_cmd->add_flag("--collapse-each-step", opt.collapse_each_step,
                    "Measure and collapse after every step");
  run_cmd->add_option("--tolerance", opt.tolerance, "Numerical tolerance");

  CLI11_PARSE(app, argc, argv);

  if (opt.config_path.empty() && opt.preset.empty()) {
    std::cerr << "error: one of --config or --preset is required\n";
    return kExitValidationFailure;
  }
  try {
    return run(opt);
  } catch (const dopwalk::WalkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
}
