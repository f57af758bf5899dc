// One-call drivers behind the CLI: run a single estimation method on a
// canonical sample and collect parameters, curve with band, AUC and the
// weak/strong null tests into one report.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roc/curve.hpp"
#include "roc/empirical.hpp"
#include "roc/sample.hpp"

namespace roc {

struct FitOptions {
  CurveMethod method = CurveMethod::Empirical;
  double level = 0.95;
  std::size_t bootstrap_replicates = 3000;  // 0 disables bands for
                                            // bootstrap-based methods
  std::uint64_t seed = 0;
  int grid_interior = 199;
  unsigned workers = 1;
  bool unconditional_bootstrap = false;  // pooled resampling, group sizes random
};

struct FitReport {
  CurveMethod method = CurveMethod::Empirical;
  std::size_t n0 = 0, n1 = 0;
  std::optional<double> alpha;
  std::optional<double> beta0;
  std::optional<double> beta1;
  double auc = 0.5;
  RocCurveEstimate curve;
  std::optional<TestResult> weak;
  std::optional<TestResult> strong;
  std::vector<std::string> warnings;
};

// `sample` must already be canonical (see parse_dataset / canonical_orientation).
FitReport run_fit(const TwoGroupSample& sample, const FitOptions& options);

}  // namespace roc
