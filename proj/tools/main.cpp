// equigame: equilibrium solvers and equivalence checkers for network-economy
// games, with file-based, seed-reproducible workflows.
//
// Exit codes: 0 success, 1 validation error, 2 non-convergence (partial
// results still written), 64 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "equigame/errors.hpp"
#include "equigame/evoloop.hpp"
#include "equigame/evolvability.hpp"
#include "equigame/json_io.hpp"
#include "equigame/moran.hpp"
#include "equigame/netecon.hpp"
#include "equigame/poset.hpp"
#include "equigame/separoid.hpp"
#include "equigame/vi.hpp"

namespace {

using equigame::DivergenceError;
using equigame::Rng;
using equigame::ValidationError;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::uint64_t seed = 42;
  std::string out = "-";
  std::string format = "json";
  double tol = 1e-8;
  long max_iter = 200000;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_solver = false) {
  cmd->add_option("--seed", opts.seed, "Random seed (all randomness derives from it)")
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Output path, or - for stdout")->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot"}))
      ->capture_default_str();
  if (with_solver) {
    cmd->add_option("--tol", opts.tol, "Convergence tolerance on the natural residual")
        ->capture_default_str();
    cmd->add_option("--max-iter", opts.max_iter, "Iteration cap")->capture_default_str();
  }
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out == "-") {
    std::cout << text;
    return;
  }
  equigame::io::store_text_file(opts.out, text);
}

void emit_json(const CommonOpts& opts, const json& j) { emit(opts, j.dump(2) + "\n"); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int worker_cap() {
  if (const char* env = std::getenv("EQUIGAME_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// ---------------------------------------------------------------- solvers

struct SolveArgs {
  CommonOpts common;
  std::string problem_path;
  std::string model_path;
  bool paper_instance = false;
  std::string algo = "extragradient";
  double alpha = 0.05;
  std::string trace_path;
  // stochastic solver knobs
  double sigma = 1.0;
  long steps = 200000;
  double step_a = 0.5, step_c = 10.0, step_p = 1.0, beta = 1.0;
};

void add_solver_flags(CLI::App* cmd, SolveArgs& args) {
  add_common(cmd, args.common, true);
  cmd->add_option("--algo", args.algo, "basic | extragradient | stochastic")
      ->check(CLI::IsMember({"basic", "extragradient", "stochastic"}))
      ->capture_default_str();
  cmd->add_option("--alpha", args.alpha, "Projection step size")->capture_default_str();
  cmd->add_option("--trace", args.trace_path, "Write the per-iterate residual CSV here");
  cmd->add_option("--sigma", args.sigma, "Stochastic: noise std dev")->capture_default_str();
  cmd->add_option("--steps", args.steps, "Stochastic: iteration count")->capture_default_str();
  cmd->add_option("--step-a", args.step_a, "Stochastic: alpha_k = a/(k+c)^p")
      ->capture_default_str();
  cmd->add_option("--step-c", args.step_c, "Stochastic: schedule offset c")->capture_default_str();
  cmd->add_option("--step-p", args.step_p, "Stochastic: schedule exponent p")
      ->capture_default_str();
  cmd->add_option("--beta", args.beta, "Stochastic: projection relaxation in (0,2)")
      ->capture_default_str();
}

equigame::vi::FeasibleSet per_coordinate_blocks(const equigame::vi::FeasibleSet& set) {
  using equigame::vi::FeasibleSet;
  std::vector<FeasibleSet> blocks;
  for (Eigen::Index i = 0; i < set.dimension(); ++i) {
    switch (set.kind()) {
      case FeasibleSet::Kind::Orthant:
        blocks.push_back(FeasibleSet::nonnegative_orthant(1));
        break;
      case FeasibleSet::Kind::Box:
        blocks.push_back(FeasibleSet::box(set.lower().segment(i, 1), set.upper().segment(i, 1)));
        break;
      default:
        throw ValidationError("stochastic solver needs an orthant or box feasible set");
    }
  }
  return FeasibleSet::product(std::move(blocks));
}

int run_solve(const SolveArgs& args, equigame::vi::VIProblem problem) {
  using namespace equigame::vi;
  SolveOptions opts;
  opts.tol = args.common.tol;
  opts.max_iter = args.common.max_iter;
  Solution sol;
  if (args.algo == "basic") {
    sol = solve_basic_projection(problem, Eigen::VectorXd::Ones(problem.n), args.alpha, opts);
  } else if (args.algo == "extragradient") {
    sol = solve_extragradient(problem, args.alpha, opts);
  } else {
    if (problem.feasible.kind() != FeasibleSet::Kind::Blocks)
      problem.feasible = per_coordinate_blocks(problem.feasible);
    const auto sampler = StochasticSampler::additive_gaussian(problem, args.sigma);
    const auto sched = StepSchedule::power(args.step_a, args.step_c, args.step_p, args.beta);
    const auto schedule_report = assert_schedule_valid(sched);
    if (!schedule_report.valid) {
      for (const auto& finding : schedule_report.findings)
        std::cerr << "schedule: " << finding << "\n";
      return kExitValidation;
    }
    sol = solve_stochastic_two_step(problem, sampler, sched, args.common.seed, args.steps);
  }
  if (!args.trace_path.empty()) {
    std::ostringstream csv;
    equigame::io::write_trace_csv(csv, sol.trace);
    equigame::io::store_text_file(args.trace_path, csv.str());
  }
  emit_json(args.common, equigame::io::write_solution(sol));
  return sol.converged ? kExitOk : kExitNoConvergence;
}

equigame::netecon::Model load_model(const SolveArgs& args) {
  if (args.paper_instance) return equigame::netecon::paper_instance();
  if (args.model_path.empty())
    throw ValidationError("netecon: pass --paper-instance or --model FILE");
  return equigame::io::read_economy(equigame::io::load_json_file(args.model_path));
}

// --------------------------------------------------------------- commands

int wire_subcommands(CLI::App& app) {
  // vi solve
  auto* vi_cmd = app.add_subcommand("vi", "Variational inequality solvers");
  auto solve_args = std::make_shared<SolveArgs>();
  auto* vi_solve = vi_cmd->add_subcommand("solve", "Solve an affine VI from JSON");
  vi_solve->add_option("--problem", solve_args->problem_path, "Problem JSON path")->required();
  add_solver_flags(vi_solve, *solve_args);
  vi_solve->callback([solve_args] {
    const auto problem =
        equigame::io::read_affine_vi(equigame::io::load_json_file(solve_args->problem_path));
    std::exit(run_solve(*solve_args, problem));
  });

  // netecon solve | evolve
  auto* net_cmd = app.add_subcommand("netecon", "Network economy equilibrium tools");
  auto net_args = std::make_shared<SolveArgs>();
  auto* net_solve = net_cmd->add_subcommand("solve", "Solve the economy's equilibrium VI");
  net_solve->add_flag("--paper-instance", net_args->paper_instance,
                      "Use the built-in two-provider fixture");
  net_solve->add_option("--model", net_args->model_path, "Economy model JSON path");
  add_solver_flags(net_solve, *net_args);
  net_solve->callback([net_args] {
    const auto model = load_model(*net_args);
    std::exit(run_solve(*net_args, equigame::netecon::assemble_vi(model)));
  });

  struct EvolveEconArgs {
    SolveArgs solve;
    int rounds = 50;
    double delta = 0.05;
  };
  auto econ_args = std::make_shared<EvolveEconArgs>();
  auto* net_evolve =
      net_cmd->add_subcommand("evolve", "Extinction-replacement rounds over the economy");
  net_evolve->add_flag("--paper-instance", econ_args->solve.paper_instance,
                       "Use the built-in two-provider fixture");
  net_evolve->add_option("--model", econ_args->solve.model_path, "Economy model JSON path");
  net_evolve->add_option("--rounds", econ_args->rounds, "Number of rounds")
      ->capture_default_str();
  net_evolve->add_option("--delta", econ_args->delta, "Mutation jitter half-width")
      ->capture_default_str();
  add_solver_flags(net_evolve, econ_args->solve);
  net_evolve->callback([econ_args] {
    const auto model = load_model(econ_args->solve);
    equigame::vi::SolveOptions opts;
    opts.tol = econ_args->solve.common.tol;
    opts.max_iter = econ_args->solve.common.max_iter;
    Rng rng(econ_args->solve.common.seed);
    const auto trace = equigame::evo::evolutionary_vi_loop(
        model, equigame::evo::MutationPolicy{econ_args->delta}, econ_args->rounds, rng, opts,
        econ_args->solve.alpha);
    std::ostringstream csv;
    csv << "round";
    for (int i = 0; i < model.m; ++i) csv << ",fitness" << (i + 1);
    csv << ",extinct,residual\n";
    for (const auto& round : trace.rounds) {
      csv << round.round;
      for (int i = 0; i < model.m; ++i) csv << ',' << fmt_double(round.fitness[i]);
      csv << ',' << round.extinct << ',' << fmt_double(round.residual) << '\n';
    }
    emit(econ_args->solve.common, csv.str());
    if (trace.truncated) {
      std::cerr << trace.diagnostic << "\n";
      std::exit(kExitNoConvergence);
    }
    std::exit(kExitOk);
  });

  // moran exact | simulate
  auto* moran_cmd = app.add_subcommand("moran", "Birth-death fixation probabilities");
  struct MoranArgs {
    CommonOpts common;
    int population = 10;
    double fitness = 1.0;
    int initial = 1;
    long replicas = 100000;
  };
  auto moran_args = std::make_shared<MoranArgs>();
  auto* moran_exact = moran_cmd->add_subcommand("exact", "Absorbing-chain linear solve");
  moran_exact->add_option("--N", moran_args->population, "Population size")->required();
  moran_exact->add_option("--r", moran_args->fitness, "Mutant relative fitness")->required();
  moran_exact->add_option("--i0", moran_args->initial, "Initial mutant count")->required();
  add_common(moran_exact, moran_args->common);
  moran_exact->callback([moran_args] {
    const double exact = equigame::evo::fixation_probability_exact(
        moran_args->population, moran_args->fitness, moran_args->initial);
    emit_json(moran_args->common, json{{"exact", exact}});
    std::exit(kExitOk);
  });
  auto* moran_sim = moran_cmd->add_subcommand("simulate", "Monte Carlo fixation estimate");
  moran_sim->add_option("--N", moran_args->population, "Population size")->required();
  moran_sim->add_option("--r", moran_args->fitness, "Mutant relative fitness")->required();
  moran_sim->add_option("--i0", moran_args->initial, "Initial mutant count")->required();
  moran_sim->add_option("--replicas", moran_args->replicas, "Replica count")
      ->capture_default_str();
  add_common(moran_sim, moran_args->common);
  moran_sim->callback([moran_args] {
    const auto est = equigame::evo::simulate_fixation(
        moran_args->population, moran_args->fitness, moran_args->initial, moran_args->replicas,
        moran_args->common.seed, worker_cap());
    const double exact = equigame::evo::fixation_probability_exact(
        moran_args->population, moran_args->fitness, moran_args->initial);
    emit_json(moran_args->common, json{{"exact", exact},
                                       {"empirical", est.rate},
                                       {"stderr", est.standard_error},
                                       {"replicas", est.replicas},
                                       {"seed", est.seed}});
    std::exit(kExitOk);
  });

  // evolve conjunction
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolvability experiments");
  struct ConjArgs {
    CommonOpts common;
    int vars = 5;
    std::string target;
    int generations = 500;
    double tolerance = 0.0;
  };
  auto conj_args = std::make_shared<ConjArgs>();
  auto* conj =
      evolve_cmd->add_subcommand("conjunction", "Single-literal mutation walk toward a target");
  conj->add_option("--n", conj_args->vars, "Variable count (<= 24)")->required();
  conj->add_option("--target", conj_args->target,
                   "Comma-separated 1-based literals; empty for the empty conjunction");
  conj->add_option("--generations", conj_args->generations, "Generation cap")
      ->capture_default_str();
  conj->add_option("--tol", conj_args->tolerance, "Benefit threshold, 0 for 1/2^(n+1)")
      ->capture_default_str();
  add_common(conj, conj_args->common);
  conj->callback([conj_args] {
    std::uint32_t mask = 0;
    std::stringstream ss(conj_args->target);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const int lit = std::stoi(item);
      if (lit < 1 || lit > conj_args->vars)
        throw ValidationError("evolve conjunction: literal " + item + " outside 1.." +
                              std::to_string(conj_args->vars));
      mask |= 1u << (lit - 1);
    }
    Rng rng(conj_args->common.seed);
    const auto trace = equigame::evo::evolve_conjunction(
        equigame::evo::Conjunction(conj_args->vars, mask),
        equigame::evo::AssignmentDist::uniform(conj_args->vars), conj_args->generations,
        conj_args->tolerance, rng);
    std::ostringstream csv;
    csv << "generation,perf,literals\n";
    for (std::size_t g = 0; g < trace.size(); ++g) {
      csv << g << ',' << fmt_double(trace[g].performance) << ',';
      bool first = true;
      for (int v = 0; v < conj_args->vars; ++v)
        if (trace[g].hypothesis.literals() & (1u << v)) {
          if (!first) csv << ' ';
          csv << 'x' << (v + 1);
          first = false;
        }
      csv << '\n';
    }
    emit(conj_args->common, csv.str());
    std::exit(trace.back().performance == 1.0 ? kExitOk : kExitNoConvergence);
  });

  // bisim check | greatest
  auto* bisim_cmd = app.add_subcommand("bisim", "Bisimulation checks on labeled systems");
  struct BisimArgs {
    CommonOpts common;
    std::string lts1, lts2, rel;
  };
  auto bisim_args = std::make_shared<BisimArgs>();
  auto* bisim_check = bisim_cmd->add_subcommand("check", "Verify a candidate relation");
  bisim_check->add_option("--lts1", bisim_args->lts1, "First system JSON")->required();
  bisim_check->add_option("--lts2", bisim_args->lts2, "Second system JSON")->required();
  bisim_check->add_option("--rel", bisim_args->rel, "Relation JSON {\"pairs\": [[s,t],...]}")
      ->required();
  add_common(bisim_check, bisim_args->common);
  bisim_check->callback([bisim_args] {
    const auto a = equigame::io::read_lts(equigame::io::load_json_file(bisim_args->lts1));
    const auto b = equigame::io::read_lts(equigame::io::load_json_file(bisim_args->lts2));
    const auto rel =
        equigame::io::read_relation(equigame::io::load_json_file(bisim_args->rel), a, b);
    const auto check = equigame::coalg::is_bisimulation(a, b, rel);
    emit_json(bisim_args->common, equigame::io::write_bisim_check(check, a, b));
    std::exit(kExitOk);
  });
  auto* bisim_greatest = bisim_cmd->add_subcommand("greatest", "Union of all bisimulations");
  bisim_greatest->add_option("--lts1", bisim_args->lts1, "First system JSON")->required();
  bisim_greatest->add_option("--lts2", bisim_args->lts2, "Second system JSON")->required();
  add_common(bisim_greatest, bisim_args->common);
  bisim_greatest->callback([bisim_args] {
    const auto a = equigame::io::read_lts(equigame::io::load_json_file(bisim_args->lts1));
    const auto b = equigame::io::read_lts(equigame::io::load_json_file(bisim_args->lts2));
    const auto rel = equigame::coalg::greatest_bisimulation(a, b);
    emit_json(bisim_args->common, equigame::io::write_relation(rel, a, b));
    std::exit(kExitOk);
  });

  // diversity build | simulate
  auto* div_cmd = app.add_subcommand("diversity", "Test-equivalence automata");
  struct DivArgs {
    CommonOpts common;
    std::string env;
    std::string state;
    std::string actions;
  };
  auto div_args = std::make_shared<DivArgs>();
  auto load_env = [](const std::string& spec) {
    if (spec.find(':') != std::string::npos) return equigame::io::parse_env_spec(spec);
    return equigame::io::read_env(equigame::io::load_json_file(spec));
  };
  auto* div_build = div_cmd->add_subcommand("build", "Compute classes and the update graph");
  div_build->add_option("--env", div_args->env, "Env JSON path or builder (register:3)")
      ->required();
  add_common(div_build, div_args->common);
  div_build->callback([div_args, load_env] {
    const auto env = load_env(div_args->env);
    const auto da = equigame::diversity::compute_classes(env);
    emit_json(div_args->common, equigame::io::write_diversity_automaton(da, env));
    std::exit(kExitOk);
  });
  auto* div_sim = div_cmd->add_subcommand("simulate", "Drive the update graph against the env");
  div_sim->add_option("--env", div_args->env, "Env JSON path or builder (register:3)")->required();
  div_sim->add_option("--state", div_args->state, "Start state index (or bit pattern)")
      ->required();
  div_sim->add_option("--actions", div_args->actions, "Action names, e.g. LRFLR")->required();
  add_common(div_sim, div_args->common);
  div_sim->callback([div_args, load_env] {
    const auto env = load_env(div_args->env);
    int state = 0;
    const bool bits = div_args->state.size() > 1 &&
                      div_args->state.find_first_not_of("01") == std::string::npos;
    if (bits)
      for (char ch : div_args->state) state = (state << 1) | (ch == '1');
    else
      state = std::stoi(div_args->state);
    if (state < 0 || state >= env.num_states)
      throw ValidationError("diversity simulate: state out of range");
    std::vector<int> actions;
    for (char ch : div_args->actions) {
      const std::string name(1, ch);
      bool found = false;
      for (std::size_t a = 0; a < env.actions.size(); ++a)
        if (env.actions[a] == name) {
          actions.push_back(static_cast<int>(a));
          found = true;
          break;
        }
      if (!found)
        throw ValidationError("diversity simulate: unknown action '" + name + "'");
    }
    const auto da = equigame::diversity::compute_classes(env);
    const auto predicted = equigame::diversity::simulate(da, da.signature(state), actions);
    json steps = json::array();
    int q = state;
    bool agrees = true;
    for (std::size_t k = 0; k < actions.size(); ++k) {
      q = env.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(actions[k])];
      json senses;
      for (std::size_t p = 0; p < env.predicates.size(); ++p) {
        senses[env.predicates[p]] = static_cast<bool>(predicted[k][p]);
        agrees &= (env.gamma[static_cast<std::size_t>(q)][p] != 0) == (predicted[k][p] != 0);
      }
      steps.push_back(senses);
    }
    emit_json(div_args->common,
              json{{"diversity", da.diversity()}, {"steps", steps}, {"matches_env", agrees}});
    std::exit(kExitOk);
  });

  // yoneda check
  auto* yoneda_cmd = app.add_subcommand("yoneda", "Generalized metric space checks");
  struct YonedaArgs {
    CommonOpts common;
    std::string space;
    double tol = 1e-9;
  };
  auto yoneda_args = std::make_shared<YonedaArgs>();
  auto* yoneda_check = yoneda_cmd->add_subcommand("check", "Axioms plus embedding isometry");
  yoneda_check->add_option("--space", yoneda_args->space, "Space JSON path")->required();
  yoneda_check->add_option("--tol", yoneda_args->tol, "Isometry tolerance (0 for exact)")
      ->capture_default_str();
  add_common(yoneda_check, yoneda_args->common);
  yoneda_check->callback([yoneda_args] {
    const auto space = equigame::io::read_space(equigame::io::load_json_file(yoneda_args->space));
    const auto violations = equigame::metric::validate(space);
    if (!violations.empty()) {
      json out;
      out["valid"] = false;
      out["violations"] = json::array();
      for (const auto& v : violations) out["violations"].push_back(v.describe(space));
      emit_json(yoneda_args->common, out);
      std::exit(kExitValidation);
    }
    const auto rep = equigame::metric::check_isometry(space, yoneda_args->tol);
    json out{{"valid", true}, {"isometric", rep.isometric}, {"max_deviation", rep.max_deviation}};
    if (rep.worst_x >= 0)
      out["worst_pair"] = {space.points[static_cast<std::size_t>(rep.worst_x)],
                          space.points[static_cast<std::size_t>(rep.worst_y)]};
    emit_json(yoneda_args->common, out);
    std::exit(kExitOk);
  });

  // separoid check
  auto* sep_cmd = app.add_subcommand("separoid", "Conditional-independence axioms");
  struct SepArgs {
    CommonOpts common;
    std::string separoid_path;
    std::string joint_path;
    bool strong = false;
  };
  auto sep_args = std::make_shared<SepArgs>();
  auto* sep_check = sep_cmd->add_subcommand("check", "Check P1-P5 (and P6 with --strong)");
  sep_check->add_option("--separoid", sep_args->separoid_path, "Separoid JSON path");
  sep_check->add_option("--joint", sep_args->joint_path,
                        "Joint probability JSON to derive the separoid from");
  sep_check->add_flag("--strong", sep_args->strong, "Also check the meet axiom P6");
  add_common(sep_check, sep_args->common);
  sep_check->callback([sep_args] {
    equigame::causal::Separoid s;
    if (!sep_args->joint_path.empty()) {
      const auto [vars, table] =
          equigame::io::read_joint(equigame::io::load_json_file(sep_args->joint_path));
      s = equigame::causal::separoid_from_joint(vars, table);
    } else if (!sep_args->separoid_path.empty()) {
      s = equigame::io::read_separoid(equigame::io::load_json_file(sep_args->separoid_path));
    } else {
      throw ValidationError("separoid check: pass --separoid or --joint");
    }
    const auto violations = equigame::causal::check_separoid(s, sep_args->strong);
    json out;
    out["violations"] = json::array();
    for (const auto& v : violations) {
      json w;
      w["axiom"] = v.axiom;
      w["witness"] = json::array();
      for (int idx : v.witness)
        if (idx >= 0) w["witness"].push_back(s.names[static_cast<std::size_t>(idx)]);
      out["violations"].push_back(w);
    }
    out["separoid"] = violations.empty();
    emit_json(sep_args->common, out);
    std::exit(kExitOk);
  });

  // poset discover
  auto* poset_cmd = app.add_subcommand("poset", "Event-order discovery from genotypes");
  struct PosetArgs {
    CommonOpts common;
    std::string csv_path;
    double epsilon = 0.0;
  };
  auto poset_args = std::make_shared<PosetArgs>();
  auto* poset_discover =
      poset_cmd->add_subcommand("discover", "Support-test ancestry plus transitive closure");
  poset_discover->add_option("--csv", poset_args->csv_path, "Genotype CSV (wide or long form)")
      ->required();
  poset_discover->add_option("--epsilon", poset_args->epsilon, "Support slack in [0,1)")
      ->capture_default_str();
  add_common(poset_discover, poset_args->common);
  poset_discover->callback([poset_args] {
    std::ifstream in(poset_args->csv_path);
    if (!in) throw ValidationError(poset_args->csv_path + ": cannot open file");
    const auto data = equigame::io::read_genotypes_csv(in, poset_args->csv_path);
    const auto poset = equigame::causal::discover_poset(data, poset_args->epsilon);
    if (poset_args->common.format == "dot")
      emit(poset_args->common, equigame::io::write_poset_dot(poset));
    else
      emit_json(poset_args->common, equigame::io::write_poset(poset));
    std::exit(kExitOk);
  });

  app.require_subcommand(1);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium games toolkit: VI solvers, evolutionary dynamics, and "
               "equivalence checks"};
  app.set_help_all_flag("--help-all", "Print help for all subcommands");
  wire_subcommands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
