// Stratified nonparametric bootstrap: full-size within-group resamples, one
// RNG stream per replicate (stream_id = replicate index, 1-based), percentile
// confidence bands from the replicate curves.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "roc/curve.hpp"
#include "roc/rng.hpp"
#include "roc/sample.hpp"

namespace roc {

struct BandConfig {
  std::size_t replicates = 3000;  // B
  double level = 0.95;
  std::vector<double> fpr_grid;   // strictly inside (0,1), sorted
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool unconditional = false;     // pooled resampling with random group sizes

  void validate() const;
};

// Full-size with-replacement resample within each group; group sizes are
// preserved exactly.
TwoGroupSample stratified_resample(const TwoGroupSample& sample, RngStream& rng);

// Pooled (unconditional) resample of n = n0 + n1 labeled observations; group
// sizes vary. Returns nullopt when a group ends up with fewer than 2 values.
std::optional<TwoGroupSample> unconditional_resample(const TwoGroupSample& sample,
                                                     RngStream& rng);

// A statistic evaluated on a (re)sampled dataset; any fixed-length vector of
// reals. Must be reentrant. Throwing marks the replicate as failed.
using SampleStatistic =
    std::function<std::vector<double>(const TwoGroupSample&)>;

struct BootstrapRun {
  std::vector<double> point;                 // statistic on the original data
  std::vector<std::vector<double>> replicates;  // successful, replicate order
  std::size_t failures = 0;
  std::size_t requested = 0;
};

// Evaluates `stat` on the original sample and on `config.replicates`
// resamples (replicate b drawing from RngStream(config.seed, b)). Replicates
// whose statistic throws are dropped and counted. Throws when more than 10%
// of replicates fail.
BootstrapRun run_bootstrap(const TwoGroupSample& sample, const BandConfig& config,
                           const SampleStatistic& stat);

// Percentile of sorted data with linear interpolation between order
// statistics (R type 7).
double percentile(std::span<const double> sorted, double q);

// Assembles a banded curve from replicate statistics: point estimates at the
// grid (first grid-size entries of `point`), per-column percentile intervals
// over the replicate rows, (0,0)/(1,1) endpoints, and a warning when more
// than 1% of requested replicates failed. Rows may carry extra trailing
// entries (e.g. fitted parameters); only the grid columns are read.
RocCurveEstimate percentile_band_curve(const BootstrapRun& run,
                                       std::span<const double> fpr_grid,
                                       double level, CurveMethod method);

// A curve estimator evaluated on the configured FPR grid.
using GridCurveEstimator =
    std::function<std::vector<double>(const TwoGroupSample&, std::span<const double>)>;

// Percentile confidence band: point estimate from the original sample,
// per-grid-point percentile interval across replicate curves, endpoints
// (0,0) and (1,1) appended. A warning is attached when more than 1% of
// replicates fail.
RocCurveEstimate bootstrap_band(const TwoGroupSample& sample,
                                const GridCurveEstimator& estimator,
                                const BandConfig& config,
                                CurveMethod method = CurveMethod::Empirical);

}  // namespace roc
