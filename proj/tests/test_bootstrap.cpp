#include <algorithm>
#include <cmath>
#include <set>

#include <doctest.h>

#include "roc/bootstrap.hpp"
#include "roc/empirical.hpp"
#include "roc/errors.hpp"

using namespace roc;

namespace {

TwoGroupSample make_sample(std::vector<double> y0, std::vector<double> y1) {
  return validate_sample(std::move(y0), std::move(y1),
                         Orientation::LowerLessDesirable);
}

GridCurveEstimator empirical_estimator() {
  return [](const TwoGroupSample& s, std::span<const double> g) {
    return empirical_roc_at(s, g);
  };
}

TwoGroupSample normalish_sample(std::size_t n0, std::size_t n1, std::uint64_t seed) {
  RngStream rng(seed, 0);
  std::vector<double> y0, y1;
  for (std::size_t i = 0; i < n0; ++i) y0.push_back(5.5 + rng.next_normal());
  for (std::size_t j = 0; j < n1; ++j) y1.push_back(4.0 + rng.next_normal());
  return make_sample(y0, y1);
}

}  // namespace

TEST_CASE("stratified_resample: sizes preserved, values from the source") {
  TwoGroupSample s = normalish_sample(13, 9, 1);
  RngStream rng(99, 1);
  TwoGroupSample r = stratified_resample(s, rng);
  CHECK(r.n0() == 13);
  CHECK(r.n1() == 9);
  std::set<double> pool0(s.reference.begin(), s.reference.end());
  for (double v : r.reference) CHECK(pool0.count(v) == 1);

  // degenerate values resample to themselves
  TwoGroupSample deg = make_sample({5, 5, 5}, {7, 7});
  RngStream rng2(1, 2);
  TwoGroupSample rd = stratified_resample(deg, rng2);
  CHECK(rd.reference == std::vector<double>{5, 5, 5});
  CHECK(rd.comparator == std::vector<double>{7, 7});
}

TEST_CASE("stratified_resample: deterministic for fixed (seed, stream)") {
  TwoGroupSample s = normalish_sample(20, 20, 2);
  RngStream a(7, 3), b(7, 3);
  TwoGroupSample ra = stratified_resample(s, a);
  TwoGroupSample rb = stratified_resample(s, b);
  CHECK(ra.reference == rb.reference);
  CHECK(ra.comparator == rb.comparator);
}

TEST_CASE("percentile: linear interpolation between order statistics") {
  std::vector<double> v = {1, 2, 3, 4, 5};
  CHECK(percentile(v, 0.0) == 1.0);
  CHECK(percentile(v, 1.0) == 5.0);
  CHECK(percentile(v, 0.5) == 3.0);
  CHECK(percentile(v, 0.25) == doctest::Approx(2.0));
  CHECK(percentile(v, 0.1) == doctest::Approx(1.4));
}

TEST_CASE("bootstrap_band: degenerate data gives zero-width band") {
  TwoGroupSample deg = make_sample({5, 5, 5}, {7, 7, 7});
  BandConfig config;
  config.replicates = 200;
  config.fpr_grid = {0.25, 0.5, 0.75};
  config.seed = 11;
  RocCurveEstimate band = bootstrap_band(deg, empirical_estimator(), config);
  check_curve_invariants(band);
  for (std::size_t i = 0; i < band.points.size(); ++i)
    CHECK(band.band[i].upper - band.band[i].lower == 0.0);
}

TEST_CASE("bootstrap_band: worker count does not change the result") {
  TwoGroupSample s = normalish_sample(25, 25, 3);
  BandConfig config;
  config.replicates = 500;
  config.fpr_grid = {0.1, 0.3, 0.5, 0.7, 0.9};
  config.seed = 777;

  config.workers = 1;
  RocCurveEstimate one = bootstrap_band(s, empirical_estimator(), config);
  config.workers = 4;
  RocCurveEstimate four = bootstrap_band(s, empirical_estimator(), config);

  REQUIRE(one.points.size() == four.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].tpr == four.points[i].tpr);
    CHECK(one.band[i].lower == four.band[i].lower);
    CHECK(one.band[i].upper == four.band[i].upper);
  }
}

TEST_CASE("bootstrap_band: band contains the median replicate and stays in [0,1]") {
  TwoGroupSample s = normalish_sample(30, 30, 4);
  BandConfig config;
  config.replicates = 400;
  config.fpr_grid = {0.067, 0.3, 0.5};
  config.seed = 5;
  RocCurveEstimate band = bootstrap_band(s, empirical_estimator(), config);
  check_curve_invariants(band);

  // recompute replicate curves to find the medians
  BootstrapRun run = run_bootstrap(s, config, [&](const TwoGroupSample& r) {
    return empirical_roc_at(r, config.fpr_grid);
  });
  for (std::size_t g = 0; g < config.fpr_grid.size(); ++g) {
    std::vector<double> col;
    for (const auto& rep : run.replicates) col.push_back(rep[g]);
    std::sort(col.begin(), col.end());
    double median = percentile(col, 0.5);
    CHECK(band.band[g + 1].lower <= median + 1e-15);
    CHECK(band.band[g + 1].upper >= median - 1e-15);
  }
}

TEST_CASE("bootstrap_band: two seeds agree within 0.05 sup norm at B >= 1000") {
  TwoGroupSample s = normalish_sample(30, 30, 6);  // n = 60 total
  BandConfig config;
  config.replicates = 1500;
  config.fpr_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  config.workers = 2;

  config.seed = 21;
  RocCurveEstimate a = bootstrap_band(s, empirical_estimator(), config);
  config.seed = 22;
  RocCurveEstimate b = bootstrap_band(s, empirical_estimator(), config);

  double sup = 0.0;
  for (std::size_t i = 1; i + 1 < a.points.size(); ++i) {
    sup = std::max(sup, std::fabs(a.band[i].lower - b.band[i].lower));
    sup = std::max(sup, std::fabs(a.band[i].upper - b.band[i].upper));
  }
  CHECK(sup < 0.05);
}

TEST_CASE("run_bootstrap: failure accounting and the >10% error") {
  TwoGroupSample s = normalish_sample(10, 10, 7);
  BandConfig config;
  config.replicates = 200;
  config.fpr_grid = {0.5};
  config.seed = 1;

  // statistic that fails for ~5% of replicates: flagged but tolerated
  int call = 0;
  BootstrapRun run = run_bootstrap(s, config, [&](const TwoGroupSample& r) -> std::vector<double> {
    ++call;
    if (r.reference[0] > r.reference[1] && r.reference[1] > r.reference[2] &&
        r.reference[2] > r.reference[3])
      throw std::runtime_error("synthetic failure");
    return empirical_roc_at(r, config.fpr_grid);
  });
  CHECK(run.failures < 40);
  CHECK(run.replicates.size() + run.failures == 200);

  // statistic that always fails: hard error
  CHECK_THROWS_AS(
      (void)run_bootstrap(s, config,
                          [&](const TwoGroupSample& r) -> std::vector<double> {
                            if (r.reference != s.reference)
                              throw std::runtime_error("always fails on resamples");
                            return {0.5};
                          }),
      convergence_error);
}

TEST_CASE("unconditional_resample: pooled sizes vary but total is fixed") {
  TwoGroupSample s = normalish_sample(12, 8, 8);
  RngStream rng(42, 1);
  bool saw_different_n0 = false;
  for (int k = 0; k < 50; ++k) {
    auto r = unconditional_resample(s, rng);
    if (!r) continue;
    CHECK(r->n0() + r->n1() == 20);
    if (r->n0() != 12) saw_different_n0 = true;
  }
  CHECK(saw_different_n0);
}

TEST_CASE("BandConfig validation") {
  BandConfig config;
  config.replicates = 10;  // too few
  config.fpr_grid = {0.5};
  CHECK_THROWS_AS(config.validate(), validation_error);
  config.replicates = 100;
  config.fpr_grid = {0.0, 0.5};  // endpoint not allowed
  CHECK_THROWS_AS(config.validate(), validation_error);
  config.fpr_grid = {0.5, 0.5};  // not strictly increasing
  CHECK_THROWS_AS(config.validate(), validation_error);
  config.fpr_grid = {0.3, 0.5};
  config.level = 0.4;  // below 0.5
  CHECK_THROWS_AS(config.validate(), validation_error);
}
