// Monte-Carlo harness: data generating mechanisms with known true ROC
// curves, replicated estimation across methods, and bias / width / coverage
// aggregation with CSV export.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "roc/rng.hpp"
#include "roc/sample.hpp"

namespace roc {

// Data generating mechanisms. Beyond the two plain two-distribution models,
// the two "crossed" mechanisms give one family's ROC shape from the other
// family's reference data (sampled by inverse transform of the displayed
// CDFs), which is the only way to probe a model that is correct about the
// curve but wrong about the data.
struct Dgm {
  enum class Kind { ExpExp, NormNorm, NormRefBiexp, ExpRefBinorm };

  Kind kind = Kind::ExpExp;
  // ExpExp:        a = lambda0, b = lambda1
  // NormNorm:      a = mu0, b = sigma0, c = mu1, d = sigma1
  // NormRefBiexp:  a = mu0, b = sigma0, c = alpha
  // ExpRefBinorm:  a = lambda0, b = beta0, c = beta1
  double a = 1.0, b = 1.0, c = 0.0, d = 1.0;

  static Dgm exp_exp(double lambda0, double lambda1);
  static Dgm norm_norm(double mu0, double sigma0, double mu1, double sigma1);
  static Dgm norm_ref_biexp(double mu0, double sigma0, double alpha);
  static Dgm exp_ref_binorm(double lambda0, double beta0, double beta1);

  std::string label() const;
};

// One independent draw per group; all kinds sample by inverse transform.
TwoGroupSample sample_dgm(const Dgm& dgm, std::size_t n0, std::size_t n1,
                          RngStream& rng);

// Analytic ROC(p) of the mechanism, for coverage scoring.
double true_roc(const Dgm& dgm, double p);

enum class SimMethod {
  EmpiricalBootstrap,
  WilsonEmpirical,
  ParamBiexp,
  ParamBinorm,
  SemiBiexp,
  SemiBinorm,
};

std::string sim_method_name(SimMethod m);

struct ScenarioRecord {
  SimMethod method;
  std::size_t n0 = 0, n1 = 0;
  double p = 0.0;
  double true_roc = 0.0;
  double mean_estimate = 0.0;
  double mean_ci_width = 0.0;
  double coverage = 0.0;
  std::size_t replicates_used = 0;
  std::size_t failures = 0;
};

struct ScenarioReport {
  std::string scenario;
  std::size_t n0 = 0, n1 = 0;
  std::size_t replicates = 0;  // M
  std::vector<ScenarioRecord> records;   // every requested (p, method)
  std::vector<SimMethod> flagged;        // methods with > 10% failures
};

// Concatenates reports from the same mechanism run at different sample
// sizes into one table (records keep their own n0/n1).
ScenarioReport merge_reports(const std::vector<ScenarioReport>& parts);

struct ScenarioConfig {
  std::size_t n0 = 30, n1 = 30;
  std::vector<SimMethod> methods;
  std::vector<double> p_grid;   // strictly inside (0, 1)
  std::size_t replicates = 1000;      // M
  std::size_t bootstrap_replicates = 3000;  // B
  double level = 0.95;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// Runs M independent replicates (replicate m draws from RngStream(seed, m);
// its bootstrap streams derive from derive_seed(seed, m)), fits every
// requested method, and aggregates mean estimate, mean interval width and
// coverage (interval containing true_roc, endpoints inclusive) at each grid
// p. Per-replicate method failures are counted and skipped; methods failing
// in more than 10% of replicates are flagged.
ScenarioReport run_scenario(const Dgm& dgm, const ScenarioConfig& config);

// CSV with columns scenario,method,n0,n1,p,true_roc,mean_est,mean_width,
// coverage,failures; UTF-8, LF line endings, deterministic formatting.
void export_report(const ScenarioReport& report, std::ostream& out);
void export_report_to_file(const ScenarioReport& report, const std::string& path);

}  // namespace roc
