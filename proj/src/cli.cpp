#include "opath/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "opath/errors.hpp"
#include "opath/experiments.hpp"
#include "opath/numfmt.hpp"
#include "opath/results_io.hpp"
#include "opath/scenario_io.hpp"
#include "opath/solvers.hpp"
#include "opath/svg_render.hpp"
#include "opath/version.hpp"

namespace opath {

namespace {

std::string tool_string() { return std::string(kToolName) + " " + kToolVersion; }

std::string join_indices(const std::vector<int>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(order[i]);
  }
  return out;
}

std::size_t write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + path);
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!file) throw IoError("failed writing output file: " + path);
  return content.size();
}

ExactSolver exact_from_name(const std::string& name) {
  return name == "exhaustive" ? ExactSolver::kExhaustive : ExactSolver::kHeldKarp;
}

std::string exact_name(ExactSolver solver) {
  return solver == ExactSolver::kExhaustive ? "exhaustive" : "held-karp";
}

std::string config_echo(const ExperimentConfig& config) {
  return "n=" + std::to_string(config.n_collectibles) + " trials=" +
         std::to_string(config.trials) + " plane=" + g9(config.plane_width) + "x" +
         g9(config.plane_height) + " start=(" + g9(config.start.x) + "," + g9(config.start.y) +
         ") sigma=" + (config.sigma.has_value() ? g9(*config.sigma) : "none") +
         " exact=" + exact_name(config.exact_solver);
}

ResultsMeta make_meta(const ExperimentConfig& config, const std::string& echo) {
  ResultsMeta meta;
  meta.tool = tool_string();
  meta.rng_algorithm = kRngAlgorithm;
  meta.master_seed = config.master_seed;
  meta.config_echo = echo;
  return meta;
}

SolveResult dispatch_solve(const Instance& instance, const std::string& algo, double sigma,
                           std::uint64_t seed) {
  if (algo == "greedy") return greedy(instance);
  if (algo == "greedy-error") {
    RandomStream rng = derive_stream(seed, 0);
    return greedy_with_error(instance, sigma, rng);
  }
  if (instance.size() <= kExhaustiveDefaultLimit) return exact_exhaustive(instance);
  return exact_held_karp(instance);
}

struct SolveArgs {
  std::string input;
  std::string algo = "greedy";
  double sigma = 0.4;
  std::uint64_t seed = kDefaultSeed;
  std::string render_path;
};

struct ExperimentArgs {
  int n = 0;
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  double sigma = 0.0;
  bool sigma_set = false;
  std::string exact = "held-karp";
  int threads = 0;
  std::string out_path;
};

struct SweepNArgs {
  int n_min = 4;
  int n_max = 13;
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  double sigma = 0.0;
  bool sigma_set = false;
  std::string exact = "held-karp";
  int threads = 0;
  std::string out_path;
};

struct SweepSigmaArgs {
  int n = 10;
  std::vector<double> sigmas = {0.05, 0.1, 0.2, 0.3, 0.4};
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string exact = "held-karp";
  int threads = 0;
  std::string out_path;
};

struct RenderArgs {
  std::string input;
  std::string out_path;
  std::vector<std::string> algos = {"greedy", "exact"};
  double sigma = 0.4;
  std::uint64_t seed = kDefaultSeed;
};

int do_solve(const SolveArgs& args, std::ostream& out) {
  const Instance instance = load_scenario(args.input);
  const SolveResult result = dispatch_solve(instance, args.algo, args.sigma, args.seed);
  out << "order: " << join_indices(result.route.order) << "\n";
  out << "length: " << g9(result.total_length) << "\n";
  if (!args.render_path.empty()) {
    const std::string svg = render_routes_svg(instance, {{args.algo, result.route}});
    write_text_file(args.render_path, svg);
  }
  return kExitOk;
}

int do_experiment(const ExperimentArgs& args, std::ostream& out) {
  ExperimentConfig config;
  config.n_collectibles = args.n;
  config.trials = args.trials;
  config.master_seed = args.seed;
  if (args.sigma_set) config.sigma = args.sigma;
  config.exact_solver = exact_from_name(args.exact);
  config.threads = args.threads;

  const ExperimentResult result = run_experiment(config);
  const ResultsMeta meta = make_meta(config, config_echo(config));
  const std::string csv = format_trials_csv(meta, result.records);
  if (args.out_path.empty()) {
    out << csv;
  } else {
    const std::size_t bytes = write_text_file(args.out_path, csv);
    out << "wrote " << args.out_path << ": " << result.records.size() << " trials, " << bytes
        << " bytes, mean excess " << g9(result.stats.mean) << "%\n";
  }
  return kExitOk;
}

int do_sweep_n(const SweepNArgs& args, std::ostream& out) {
  if (args.n_min < 1 || args.n_min > args.n_max) {
    throw ConfigError("sweep-n requires 1 <= n-min <= n-max");
  }
  ExperimentConfig base;
  base.trials = args.trials;
  base.master_seed = args.seed;
  if (args.sigma_set) base.sigma = args.sigma;
  base.exact_solver = exact_from_name(args.exact);
  base.threads = args.threads;

  std::vector<int> n_values;
  for (int n = args.n_min; n <= args.n_max; ++n) n_values.push_back(n);
  const std::vector<SweepRow> rows = sweep_n(n_values, base);

  ResultsMeta meta = make_meta(base, "");
  meta.config_echo = "sweep=n n=" + std::to_string(args.n_min) + ".." +
                     std::to_string(args.n_max) + " trials=" + std::to_string(base.trials) +
                     " plane=" + g9(base.plane_width) + "x" + g9(base.plane_height) + " start=(" +
                     g9(base.start.x) + "," + g9(base.start.y) + ") sigma=" +
                     (base.sigma.has_value() ? g9(*base.sigma) : "none") +
                     " exact=" + exact_name(base.exact_solver);
  const std::string csv = format_sweep_csv(meta, rows);
  if (args.out_path.empty()) {
    out << csv;
  } else {
    write_text_file(args.out_path, csv);
    out << "wrote " << args.out_path << ": " << rows.size() << " rows\n";
  }
  return kExitOk;
}

int do_sweep_sigma(const SweepSigmaArgs& args, std::ostream& out) {
  ExperimentConfig base;
  base.n_collectibles = args.n;
  base.trials = args.trials;
  base.master_seed = args.seed;
  base.exact_solver = exact_from_name(args.exact);
  base.threads = args.threads;

  const std::vector<SweepRow> rows = sweep_sigma(args.sigmas, base);

  ResultsMeta meta = make_meta(base, "");
  std::string sigma_list;
  for (std::size_t i = 0; i < args.sigmas.size(); ++i) {
    if (i > 0) sigma_list += ',';
    sigma_list += g9(args.sigmas[i]);
  }
  meta.config_echo = "sweep=sigma n=" + std::to_string(base.n_collectibles) + " sigmas=" +
                     sigma_list + " trials=" + std::to_string(base.trials) + " plane=" +
                     g9(base.plane_width) + "x" + g9(base.plane_height) + " start=(" +
                     g9(base.start.x) + "," + g9(base.start.y) + ") exact=" +
                     exact_name(base.exact_solver);
  const std::string csv = format_sweep_csv(meta, rows);
  if (args.out_path.empty()) {
    out << csv;
  } else {
    write_text_file(args.out_path, csv);
    out << "wrote " << args.out_path << ": " << rows.size() << " rows\n";
  }
  return kExitOk;
}

int do_render(const RenderArgs& args, std::ostream& out) {
  const Instance instance = load_scenario(args.input);
  std::vector<LabeledRoute> routes;
  routes.reserve(args.algos.size());
  for (const std::string& algo : args.algos) {
    routes.push_back({algo, dispatch_solve(instance, algo, args.sigma, args.seed).route});
  }
  const std::string svg = render_routes_svg(instance, routes);
  write_text_file(args.out_path, svg);
  out << "wrote " << args.out_path << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"open-path collectible routing: greedy and exact solvers with a Monte Carlo "
               "benchmark harness"};
  app.set_version_flag("--version", tool_string());
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one scenario and print the route");
  solve_cmd->add_option("--input,-i", solve_args.input, "Scenario JSON file")->required();
  solve_cmd->add_option("--algo,-a", solve_args.algo, "Algorithm")
      ->check(CLI::IsMember({"greedy", "greedy-error", "exact"}))
      ->capture_default_str();
  solve_cmd->add_option("--sigma", solve_args.sigma, "Perception-error sigma (greedy-error)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve_args.seed, "Noise seed (greedy-error)")
      ->capture_default_str();
  solve_cmd->add_option("--render", solve_args.render_path, "Write the solved route as SVG");

  ExperimentArgs exp_args;
  auto* exp_cmd = app.add_subcommand("experiment", "Run one Monte Carlo experiment");
  exp_cmd->add_option("--n", exp_args.n, "Collectibles per instance")->required();
  exp_cmd->add_option("--trials", exp_args.trials, "Trials")->capture_default_str();
  exp_cmd->add_option("--seed", exp_args.seed, "Master seed")->capture_default_str();
  auto* exp_sigma =
      exp_cmd->add_option("--sigma", exp_args.sigma, "Perception-error sigma (omit for noiseless)");
  exp_cmd->add_option("--exact", exp_args.exact, "Exact solver")
      ->check(CLI::IsMember({"held-karp", "exhaustive"}))
      ->capture_default_str();
  exp_cmd->add_option("--threads", exp_args.threads, "Worker threads (0 = runtime default)")
      ->capture_default_str();
  exp_cmd->add_option("--out", exp_args.out_path, "Results CSV path (default: stdout)");

  SweepNArgs sweepn_args;
  auto* sweepn_cmd = app.add_subcommand("sweep-n", "Experiments over a range of N");
  sweepn_cmd->add_option("--n-min", sweepn_args.n_min, "Smallest N")->capture_default_str();
  sweepn_cmd->add_option("--n-max", sweepn_args.n_max, "Largest N")->capture_default_str();
  sweepn_cmd->add_option("--trials", sweepn_args.trials, "Trials per N")->capture_default_str();
  sweepn_cmd->add_option("--seed", sweepn_args.seed, "Master seed")->capture_default_str();
  auto* sweepn_sigma = sweepn_cmd->add_option("--sigma", sweepn_args.sigma,
                                              "Perception-error sigma (omit for noiseless)");
  sweepn_cmd->add_option("--exact", sweepn_args.exact, "Exact solver")
      ->check(CLI::IsMember({"held-karp", "exhaustive"}))
      ->capture_default_str();
  sweepn_cmd->add_option("--threads", sweepn_args.threads, "Worker threads (0 = runtime default)")
      ->capture_default_str();
  sweepn_cmd->add_option("--out", sweepn_args.out_path, "Results CSV path (default: stdout)");

  SweepSigmaArgs sweeps_args;
  auto* sweeps_cmd = app.add_subcommand("sweep-sigma", "Noisy-greedy experiments over sigma");
  sweeps_cmd->add_option("--n", sweeps_args.n, "Collectibles per instance")->capture_default_str();
  sweeps_cmd->add_option("--sigmas", sweeps_args.sigmas, "Sigma levels")
      ->delimiter(',')
      ->capture_default_str();
  sweeps_cmd->add_option("--trials", sweeps_args.trials, "Trials per sigma")
      ->capture_default_str();
  sweeps_cmd->add_option("--seed", sweeps_args.seed, "Master seed (shared across sigmas)")
      ->capture_default_str();
  sweeps_cmd->add_option("--exact", sweeps_args.exact, "Exact solver")
      ->check(CLI::IsMember({"held-karp", "exhaustive"}))
      ->capture_default_str();
  sweeps_cmd->add_option("--threads", sweeps_args.threads, "Worker threads (0 = runtime default)")
      ->capture_default_str();
  sweeps_cmd->add_option("--out", sweeps_args.out_path, "Results CSV path (default: stdout)");

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Render a scenario with solved routes as SVG");
  render_cmd->add_option("--input,-i", render_args.input, "Scenario JSON file")->required();
  render_cmd->add_option("--out,-o", render_args.out_path, "SVG output path")->required();
  render_cmd->add_option("--algos", render_args.algos, "Routes to draw")
      ->delimiter(',')
      ->check(CLI::IsMember({"greedy", "greedy-error", "exact"}))
      ->capture_default_str();
  render_cmd->add_option("--sigma", render_args.sigma, "Perception-error sigma (greedy-error)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  render_cmd->add_option("--seed", render_args.seed, "Noise seed (greedy-error)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  exp_args.sigma_set = exp_sigma->count() > 0;
  sweepn_args.sigma_set = sweepn_sigma->count() > 0;

  try {
    if (solve_cmd->parsed()) return do_solve(solve_args, out);
    if (exp_cmd->parsed()) return do_experiment(exp_args, out);
    if (sweepn_cmd->parsed()) return do_sweep_n(sweepn_args, out);
    if (sweeps_cmd->parsed()) return do_sweep_sigma(sweeps_args, out);
    if (render_cmd->parsed()) return do_render(render_args, out);
    err << "error: no subcommand given\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (line " << e.line() << ", column " << e.column() << ")\n";
    return kExitData;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const SizeExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back(kToolName);
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace opath
