#include <cmath>
#include <limits>

#include <doctest.h>

#include "oracles.hpp"
#include "roc/curve.hpp"
#include "roc/empirical.hpp"
#include "roc/errors.hpp"
#include "roc/rng.hpp"
#include "roc/sample.hpp"

using namespace roc;

TEST_CASE("validate_sample: happy path and rejections") {
  TwoGroupSample s = validate_sample({1, 2, 3}, {4, 5, 6},
                                     Orientation::LowerLessDesirable);
  CHECK(s.n0() == 3);
  CHECK(s.n1() == 3);

  CHECK_THROWS_WITH_AS(
      (void)validate_sample({1}, {2, 3}, Orientation::LowerLessDesirable),
      doctest::Contains("reference group too small"), validation_error);
  CHECK_THROWS_WITH_AS(
      (void)validate_sample({1, 2}, {3}, Orientation::LowerLessDesirable),
      doctest::Contains("comparator group too small"), validation_error);
  CHECK_THROWS_WITH_AS(
      (void)validate_sample({1, std::numeric_limits<double>::quiet_NaN()}, {2, 3},
                            Orientation::LowerLessDesirable),
      doctest::Contains("non-finite value"), validation_error);
  CHECK_THROWS_AS(
      (void)validate_sample({1, 2}, {std::numeric_limits<double>::infinity(), 3},
                            Orientation::LowerLessDesirable),
      validation_error);
}

TEST_CASE("canonical_orientation: identity, negation, idempotence") {
  TwoGroupSample low = validate_sample({1, 2}, {3, 4}, Orientation::LowerLessDesirable);
  TwoGroupSample same = canonical_orientation(low);
  CHECK(same.reference == low.reference);
  CHECK(same.comparator == low.comparator);

  TwoGroupSample high = validate_sample({1, 2}, {3, 4}, Orientation::HigherLessDesirable);
  TwoGroupSample flipped = canonical_orientation(high);
  CHECK(flipped.reference == std::vector<double>{-1, -2});
  CHECK(flipped.comparator == std::vector<double>{-3, -4});
  CHECK(flipped.orientation == Orientation::LowerLessDesirable);

  TwoGroupSample twice = canonical_orientation(flipped);
  CHECK(twice.reference == flipped.reference);
  CHECK(twice.comparator == flipped.comparator);
}

TEST_CASE("canonical_orientation: estimator agreement with manual negation") {
  RngStream rng(11, 1);
  std::vector<double> y0, y1;
  for (int i = 0; i < 25; ++i) y0.push_back(rng.next_normal());
  for (int i = 0; i < 20; ++i) y1.push_back(1.0 + rng.next_normal());

  TwoGroupSample declared = validate_sample(y0, y1, Orientation::HigherLessDesirable);
  RocCurveEstimate via_canonical = empirical_roc(canonical_orientation(declared));

  std::vector<double> n0 = y0, n1v = y1;
  for (auto& v : n0) v = -v;
  for (auto& v : n1v) v = -v;
  RocCurveEstimate via_manual =
      empirical_roc(validate_sample(n0, n1v, Orientation::LowerLessDesirable));

  REQUIRE(via_canonical.points.size() == via_manual.points.size());
  for (std::size_t i = 0; i < via_canonical.points.size(); ++i) {
    CHECK(via_canonical.points[i].fpr == via_manual.points[i].fpr);
    CHECK(via_canonical.points[i].tpr == via_manual.points[i].tpr);
  }
}

TEST_CASE("auc_orient") {
  CHECK(auc_orient(0.25) == 0.75);
  CHECK(auc_orient(0.5) == 0.5);
  CHECK(auc_orient(0.8) == 0.8);
}

namespace {

RocCurveEstimate banded_example_curve() {
  RocCurveEstimate c;
  c.points = {RocPoint{0.0, 0.0, std::nullopt}, RocPoint{0.1, 0.6, 2.5},
              RocPoint{0.2, 0.8, 3.0}, RocPoint{0.55, 0.9, 4.0},
              RocPoint{1.0, 1.0, std::nullopt}};
  c.band = {BandInterval{0.0, 0.0}, BandInterval{0.35, 0.75},
            BandInterval{0.6, 0.93}, BandInterval{0.71, 0.99},
            BandInterval{1.0, 1.0}};
  return c;
}

}  // namespace

TEST_CASE("convention_reflect: coordinates, fixed line, involution") {
  RocCurveEstimate c = banded_example_curve();
  RocCurveEstimate r = convention_reflect(c);
  check_curve_invariants(r);

  // (0.1, 0.6) -> (0.4, 0.9)
  bool found = false;
  for (const auto& pt : r.points)
    if (pt.fpr == doctest::Approx(0.4).epsilon(1e-15) &&
        pt.tpr == doctest::Approx(0.9).epsilon(1e-15))
      found = true;
  CHECK(found);

  // a point on y = 1 - x maps to itself
  RocCurveEstimate line;
  line.points = {RocPoint{0.0, 0.0, std::nullopt}, RocPoint{0.2, 0.8, std::nullopt},
                 RocPoint{1.0, 1.0, std::nullopt}};
  RocCurveEstimate rl = convention_reflect(line);
  CHECK(rl.points[1].fpr == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(rl.points[1].tpr == doctest::Approx(0.8).epsilon(1e-15));

  // involution on the point set
  RocCurveEstimate rr = convention_reflect(r);
  REQUIRE(rr.points.size() == c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    CHECK(rr.points[i].fpr == doctest::Approx(c.points[i].fpr).epsilon(1e-14));
    CHECK(rr.points[i].tpr == doctest::Approx(c.points[i].tpr).epsilon(1e-14));
  }
}

TEST_CASE("convention_reflect: preserves trapezoid area") {
  RocCurveEstimate c = banded_example_curve();
  CHECK(trapezoid_auc(convention_reflect(c)) ==
        doctest::Approx(trapezoid_auc(c)).epsilon(1e-12));

  // also for a dense random staircase
  RngStream rng(5, 9);
  std::vector<double> y0, y1;
  for (int i = 0; i < 40; ++i) y0.push_back(rng.next_normal());
  for (int i = 0; i < 35; ++i) y1.push_back(rng.next_normal() - 0.8);
  RocCurveEstimate stair =
      empirical_roc(validate_sample(y0, y1, Orientation::LowerLessDesirable));
  CHECK(trapezoid_auc(convention_reflect(stair)) ==
        doctest::Approx(trapezoid_auc(stair)).epsilon(1e-12));
}

TEST_CASE("convention_reflect: reflected band still contains the estimate") {
  RocCurveEstimate r = convention_reflect(banded_example_curve());
  REQUIRE(r.has_band());
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    CHECK(r.band[i].lower <= r.points[i].tpr);
    CHECK(r.band[i].upper >= r.points[i].tpr);
  }
}

TEST_CASE("check_curve_invariants: catches violations") {
  RocCurveEstimate bad;
  bad.points = {RocPoint{0.0, 0.0, std::nullopt}, RocPoint{0.5, 0.4, std::nullopt},
                RocPoint{0.4, 0.6, std::nullopt}, RocPoint{1.0, 1.0, std::nullopt}};
  CHECK_THROWS_AS(check_curve_invariants(bad), validation_error);

  RocCurveEstimate no_origin;
  no_origin.points = {RocPoint{0.1, 0.0, std::nullopt}, RocPoint{1.0, 1.0, std::nullopt}};
  CHECK_THROWS_AS(check_curve_invariants(no_origin), validation_error);
}

TEST_CASE("default_fpr_grid: 199 interior points at k/200") {
  auto grid = default_fpr_grid();
  REQUIRE(grid.size() == 199);
  CHECK(grid.front() == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(grid.back() == doctest::Approx(0.995).epsilon(1e-15));
  CHECK(grid[99] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("resolve_auto_orientation picks the AUC >= 0.5 convention") {
  // comparator stochastically smaller: already canonical
  TwoGroupSample a = validate_sample({5, 6, 7}, {1, 2, 3}, Orientation::LowerLessDesirable);
  TwoGroupSample ra = resolve_auto_orientation(a);
  CHECK(ra.reference == a.reference);

  // comparator stochastically larger: negated
  TwoGroupSample b = validate_sample({1, 2, 3}, {5, 6, 7}, Orientation::LowerLessDesirable);
  TwoGroupSample rb = resolve_auto_orientation(b);
  CHECK(rb.reference == std::vector<double>{-1, -2, -3});
  CHECK(pair_order_statistic(rb) >= 0.5);
}
