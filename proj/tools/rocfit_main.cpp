// rocfit: ROC curve estimation and simulation from the command line.
//
//   rocfit fit      --data file.csv --method empirical [--svg out.svg] ...
//   rocfit simulate --dgm norm --mu0 5.5 --mu1 4.0 --n0 30 --n1 30 ...
//
// Results go to standard output or --out files; diagnostics to standard
// error. Exit code 0 iff no error. Estimation failures are reported as
// machine-readable error JSON on standard output with a nonzero exit code.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roc/analysis.hpp"
#include "roc/dataset.hpp"
#include "roc/errors.hpp"
#include "roc/json_io.hpp"
#include "roc/parallel.hpp"
#include "roc/simulation.hpp"
#include "roc/svg.hpp"

namespace {

struct FitArgs {
  std::string data_path;
  std::string method = "empirical";
  std::string convention = "auto";
  double level = 0.95;
  std::size_t bootstrap = 3000;
  int grid = 199;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned workers = roc::default_worker_count();
  bool unconditional = false;
  std::string out_path;
  std::string svg_path;
  int svg_width = 600;
  int svg_height = 600;
};

struct SimulateArgs {
  std::string dgm = "norm";
  double lambda0 = 1.0, lambda1 = 4.0;
  double mu0 = 5.5, sd0 = 1.0, mu1 = 4.0, sd1 = 1.0;
  double alpha = 4.0, beta0 = 1.5, beta1 = 1.0;
  std::size_t n0 = 30, n1 = 30;
  std::string methods = "empirical,wilson";
  std::string p_grid = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::size_t replicates = 1000;   // M
  std::size_t bootstrap = 3000;    // B
  double level = 0.95;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned workers = roc::default_worker_count();
  std::string out_path;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

roc::CurveMethod parse_method(const std::string& name) {
  if (name == "empirical") return roc::CurveMethod::Empirical;
  if (name == "param-biexp") return roc::CurveMethod::ParamBiexp;
  if (name == "param-binorm") return roc::CurveMethod::ParamBinorm;
  if (name == "semi-biexp") return roc::CurveMethod::SemiBiexp;
  if (name == "semi-binorm") return roc::CurveMethod::SemiBinorm;
  throw CLI::ValidationError("--method", "unknown method: " + name);
}

roc::SimMethod parse_sim_method(const std::string& name) {
  if (name == "empirical") return roc::SimMethod::EmpiricalBootstrap;
  if (name == "wilson") return roc::SimMethod::WilsonEmpirical;
  if (name == "param-biexp") return roc::SimMethod::ParamBiexp;
  if (name == "param-binorm") return roc::SimMethod::ParamBinorm;
  if (name == "semi-biexp") return roc::SimMethod::SemiBiexp;
  if (name == "semi-binorm") return roc::SimMethod::SemiBinorm;
  throw CLI::ValidationError("--methods", "unknown method: " + name);
}

roc::ConventionFlag parse_convention(const std::string& name) {
  if (name == "lower") return roc::ConventionFlag::Lower;
  if (name == "higher") return roc::ConventionFlag::Higher;
  if (name == "auto") return roc::ConventionFlag::Auto;
  throw CLI::ValidationError("--convention", "unknown convention: " + name);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failure: " + path);
}

int run_fit_command(const FitArgs& args) {
  bool stochastic = args.bootstrap > 0 &&
                    (args.method == "empirical" || args.method == "semi-biexp" ||
                     args.method == "semi-binorm");
  if (stochastic && !args.seed_given) {
    std::cerr << "error: --seed is required for bootstrap-based methods "
                 "(no silent nondeterminism)\n";
    return 2;
  }

  roc::TwoGroupSample sample =
      roc::parse_dataset_file(args.data_path, parse_convention(args.convention));

  roc::FitOptions options;
  options.method = parse_method(args.method);
  options.level = args.level;
  options.bootstrap_replicates = args.bootstrap;
  options.seed = args.seed;
  options.grid_interior = args.grid;
  options.workers = args.workers;
  options.unconditional_bootstrap = args.unconditional;

  roc::FitReport report = roc::run_fit(sample, options);
  std::string json_text = roc::dump_json(roc::fit_report_to_json(report));

  if (!args.svg_path.empty()) {
    std::string svg = roc::render_curve_svg(report.curve, args.svg_width,
                                            args.svg_height,
                                            roc::curve_method_name(report.method));
    write_text_file(args.svg_path, svg);
  }
  if (!args.out_path.empty())
    write_text_file(args.out_path, json_text);
  else
    std::cout << json_text;
  return 0;
}

int run_simulate_command(const SimulateArgs& args) {
  if (!args.seed_given) {
    std::cerr << "error: --seed is required for simulate "
                 "(no silent nondeterminism)\n";
    return 2;
  }

  roc::Dgm dgm;
  if (args.dgm == "exp")
    dgm = roc::Dgm::exp_exp(args.lambda0, args.lambda1);
  else if (args.dgm == "norm")
    dgm = roc::Dgm::norm_norm(args.mu0, args.sd0, args.mu1, args.sd1);
  else if (args.dgm == "norm-biexp")
    dgm = roc::Dgm::norm_ref_biexp(args.mu0, args.sd0, args.alpha);
  else if (args.dgm == "exp-binorm")
    dgm = roc::Dgm::exp_ref_binorm(args.lambda0, args.beta0, args.beta1);
  else {
    std::cerr << "error: unknown --dgm (expected exp, norm, norm-biexp, exp-binorm)\n";
    return 2;
  }

  roc::ScenarioConfig config;
  config.n0 = args.n0;
  config.n1 = args.n1;
  config.replicates = args.replicates;
  config.bootstrap_replicates = args.bootstrap;
  config.level = args.level;
  config.seed = args.seed;
  config.workers = args.workers;
  for (const auto& m : split_commas(args.methods))
    config.methods.push_back(parse_sim_method(m));
  for (const auto& p : split_commas(args.p_grid)) {
    try {
      config.p_grid.push_back(std::stod(p));
    } catch (const std::exception&) {
      std::cerr << "error: bad --p-grid entry: " << p << "\n";
      return 2;
    }
  }

  roc::ScenarioReport report = roc::run_scenario(dgm, config);

  std::ostringstream csv;
  roc::export_report(report, csv);
  if (!args.out_path.empty()) {
    write_text_file(args.out_path, csv.str());
    // human-readable summary to stdout, full CSV already on disk
    std::cout << "scenario " << report.scenario << " n0=" << report.n0
              << " n1=" << report.n1 << " M=" << report.replicates << "\n";
    for (const auto& rec : report.records) {
      std::printf("%-12s p=%-7.4f true=%.4f est=%.4f width=%.4f coverage=%.3f\n",
                  roc::sim_method_name(rec.method).c_str(), rec.p, rec.true_roc,
                  rec.mean_estimate, rec.mean_ci_width, rec.coverage);
    }
    for (auto m : report.flagged)
      std::cerr << "warning: method " << roc::sim_method_name(m)
                << " failed in more than 10% of replicates\n";
  } else {
    std::cout << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ROC curve estimation with confidence bands"};
  app.require_subcommand(1);

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand("fit", "Fit an ROC curve to a CSV dataset");
  fit->add_option("--data", fit_args.data_path, "CSV file (header group,value)")
      ->required();
  fit->add_option("--method", fit_args.method,
                  "empirical | param-biexp | param-binorm | semi-biexp | semi-binorm");
  fit->add_option("--convention", fit_args.convention, "lower | higher | auto");
  fit->add_option("--level", fit_args.level, "confidence level");
  fit->add_option("--bootstrap", fit_args.bootstrap,
                  "bootstrap replicates (0 disables bands)");
  fit->add_option("--grid", fit_args.grid, "interior FPR grid points");
  fit->add_option("--seed", fit_args.seed, "RNG seed")
      ->each([&](const std::string&) { fit_args.seed_given = true; });
  fit->add_option("--workers", fit_args.workers, "worker threads");
  fit->add_flag("--unconditional", fit_args.unconditional,
                "pooled (unconditional) bootstrap instead of stratified");
  fit->add_option("--out", fit_args.out_path, "write JSON here instead of stdout");
  fit->add_option("--svg", fit_args.svg_path, "write an SVG plot here");
  fit->add_option("--svg-width", fit_args.svg_width, "SVG width");
  fit->add_option("--svg-height", fit_args.svg_height, "SVG height");

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "Run a Monte-Carlo scenario");
  sim->add_option("--dgm", sim_args.dgm, "exp | norm | norm-biexp | exp-binorm");
  sim->add_option("--lambda0", sim_args.lambda0, "reference rate (exp DGMs)");
  sim->add_option("--lambda1", sim_args.lambda1, "comparator rate (exp DGM)");
  sim->add_option("--mu0", sim_args.mu0, "reference mean (norm DGMs)");
  sim->add_option("--sd0", sim_args.sd0, "reference SD (norm DGMs)");
  sim->add_option("--mu1", sim_args.mu1, "comparator mean (norm DGM)");
  sim->add_option("--sd1", sim_args.sd1, "comparator SD (norm DGM)");
  sim->add_option("--alpha", sim_args.alpha, "curve parameter (norm-biexp DGM)");
  sim->add_option("--beta0", sim_args.beta0, "curve intercept (exp-binorm DGM)");
  sim->add_option("--beta1", sim_args.beta1, "curve slope (exp-binorm DGM)");
  sim->add_option("--n0", sim_args.n0, "reference group size");
  sim->add_option("--n1", sim_args.n1, "comparator group size");
  sim->add_option("--methods", sim_args.methods, "comma-separated method list");
  sim->add_option("--p-grid", sim_args.p_grid, "comma-separated FPR values");
  sim->add_option("--M", sim_args.replicates, "simulation replicates");
  sim->add_option("--B", sim_args.bootstrap, "bootstrap replicates");
  sim->add_option("--level", sim_args.level, "confidence level");
  sim->add_option("--seed", sim_args.seed, "RNG seed")
      ->each([&](const std::string&) { sim_args.seed_given = true; });
  sim->add_option("--workers", sim_args.workers, "worker threads");
  sim->add_option("--out", sim_args.out_path, "CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit->parsed()) return run_fit_command(fit_args);
    if (sim->parsed()) return run_simulate_command(sim_args);
  } catch (const roc::parse_error& e) {
    std::cout << roc::dump_json(roc::error_to_json("parse", e.what()));
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const roc::validation_error& e) {
    std::cout << roc::dump_json(roc::error_to_json("validation", e.what()));
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const roc::separation_error& e) {
    std::cout << roc::dump_json(roc::error_to_json("separation", e.what()));
    std::cerr << "separation error: " << e.what() << "\n";
    return 1;
  } catch (const roc::convergence_error& e) {
    std::cout << roc::dump_json(roc::error_to_json("convergence", e.what()));
    std::cerr << "convergence error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << roc::dump_json(roc::error_to_json("runtime", e.what()));
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
