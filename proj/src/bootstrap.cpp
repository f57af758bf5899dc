#include "roc/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "roc/errors.hpp"
#include "roc/parallel.hpp"

namespace roc {

void BandConfig::validate() const {
  if (replicates < 100)
    throw validation_error("bootstrap config: need at least 100 replicates");
  if (!(level > 0.5 && level < 1.0))
    throw validation_error("bootstrap config: level must lie in (0.5, 1)");
  for (std::size_t i = 0; i < fpr_grid.size(); ++i) {
    if (!(fpr_grid[i] > 0.0 && fpr_grid[i] < 1.0))
      throw validation_error("bootstrap config: grid values must lie strictly in (0, 1)");
    if (i > 0 && fpr_grid[i] <= fpr_grid[i - 1])
      throw validation_error("bootstrap config: grid must be strictly increasing");
  }
}

TwoGroupSample stratified_resample(const TwoGroupSample& sample, RngStream& rng) {
  TwoGroupSample out;
  out.orientation = sample.orientation;
  out.reference.reserve(sample.n0());
  out.comparator.reserve(sample.n1());
  for (std::size_t i = 0; i < sample.n0(); ++i)
    out.reference.push_back(sample.reference[rng.next_index(sample.n0())]);
  for (std::size_t j = 0; j < sample.n1(); ++j)
    out.comparator.push_back(sample.comparator[rng.next_index(sample.n1())]);
  return out;
}

std::optional<TwoGroupSample> unconditional_resample(const TwoGroupSample& sample,
                                                     RngStream& rng) {
  std::size_t n = sample.n();
  TwoGroupSample out;
  out.orientation = sample.orientation;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t idx = rng.next_index(n);
    if (idx < sample.n0())
      out.reference.push_back(sample.reference[idx]);
    else
      out.comparator.push_back(sample.comparator[idx - sample.n0()]);
  }
  if (out.reference.size() < 2 || out.comparator.size() < 2) return std::nullopt;
  return out;
}

BootstrapRun run_bootstrap(const TwoGroupSample& sample, const BandConfig& config,
                           const SampleStatistic& stat) {
  config.validate();

  BootstrapRun run;
  run.requested = config.replicates;
  run.point = stat(sample);

  std::vector<std::optional<std::vector<double>>> slots(config.replicates);
  parallel_for_index(config.replicates, config.workers, [&](std::size_t i) {
    RngStream rng(config.seed, static_cast<std::uint64_t>(i + 1));
    try {
      if (config.unconditional) {
        auto resampled = unconditional_resample(sample, rng);
        if (resampled) slots[i] = stat(*resampled);
      } else {
        slots[i] = stat(stratified_resample(sample, rng));
      }
    } catch (const std::exception&) {
      // failed replicate; counted below
    }
  });

  run.replicates.reserve(config.replicates);
  for (auto& s : slots) {
    if (s)
      run.replicates.push_back(std::move(*s));
    else
      ++run.failures;
  }
  if (run.failures * 10 > config.replicates)
    throw convergence_error("bootstrap: more than 10% of replicates failed",
                            static_cast<int>(run.failures),
                            static_cast<double>(run.failures) /
                                static_cast<double>(config.replicates));
  return run;
}

double percentile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::domain_error("percentile of empty data");
  if (sorted.size() == 1) return sorted[0];
  double h = q * static_cast<double>(sorted.size() - 1);
  double fl = std::floor(h);
  std::size_t lo = static_cast<std::size_t>(fl);
  if (lo >= sorted.size() - 1) return sorted.back();
  return sorted[lo] + (h - fl) * (sorted[lo + 1] - sorted[lo]);
}

RocCurveEstimate percentile_band_curve(const BootstrapRun& run,
                                       std::span<const double> fpr_grid,
                                       double level, CurveMethod method) {
  RocCurveEstimate curve;
  curve.method = method;
  curve.level = level;
  curve.band_failures = static_cast<int>(run.failures);

  curve.points.reserve(fpr_grid.size() + 2);
  curve.band.reserve(fpr_grid.size() + 2);
  curve.points.push_back(RocPoint{0.0, 0.0, std::nullopt});
  curve.band.push_back(BandInterval{0.0, 0.0});

  double alpha = 1.0 - level;
  std::vector<double> column(run.replicates.size());
  for (std::size_t g = 0; g < fpr_grid.size(); ++g) {
    for (std::size_t b = 0; b < run.replicates.size(); ++b)
      column[b] = run.replicates[b][g];
    std::sort(column.begin(), column.end());
    double lo = percentile(column, 0.5 * alpha);
    double hi = percentile(column, 1.0 - 0.5 * alpha);
    double pt = run.point[g];
    curve.points.push_back(RocPoint{fpr_grid[g], pt, std::nullopt});
    curve.band.push_back(BandInterval{std::clamp(std::min(lo, pt), 0.0, 1.0),
                                      std::clamp(std::max(hi, pt), 0.0, 1.0)});
  }
  curve.points.push_back(RocPoint{1.0, 1.0, std::nullopt});
  curve.band.push_back(BandInterval{1.0, 1.0});

  if (run.failures * 100 > run.requested)
    curve.warnings.push_back(std::to_string(run.failures) + " of " +
                             std::to_string(run.requested) +
                             " bootstrap replicates failed");
  return curve;
}

RocCurveEstimate bootstrap_band(const TwoGroupSample& sample,
                                const GridCurveEstimator& estimator,
                                const BandConfig& config, CurveMethod method) {
  const auto& grid = config.fpr_grid;
  BootstrapRun run = run_bootstrap(
      sample, config,
      [&](const TwoGroupSample& s) { return estimator(s, grid); });
  return percentile_band_curve(run, grid, config.level, method);
}

}  // namespace roc
