// ROC curve representation: a finite grid of (FPR, TPR) points, optionally
// with a pointwise confidence band, plus the symmetry transforms that relate
// the two directional conventions.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace roc {

enum class CurveMethod { Empirical, ParamBiexp, ParamBinorm, SemiBiexp, SemiBinorm };

std::string curve_method_name(CurveMethod m);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  // Cut-off inducing the point, when one exists (staircase vertices).
  std::optional<double> threshold;
};

struct BandInterval {
  double lower = 0.0;
  double upper = 1.0;
};

struct RocCurveEstimate {
  std::vector<RocPoint> points;        // sorted by fpr, tpr nondecreasing
  std::vector<BandInterval> band;      // empty, or one interval per point
  CurveMethod method = CurveMethod::Empirical;
  double level = 0.95;
  int band_failures = 0;               // failed bootstrap replicates, if any
  std::vector<std::string> warnings;

  bool has_band() const noexcept { return !band.empty(); }
};

// Checks the structural invariants (sorted, monotone, unit-square endpoints,
// band containment); throws validation_error naming the first violation.
void check_curve_invariants(const RocCurveEstimate& curve);

// Area under the piecewise-linear interpolation of the curve's points.
double trapezoid_auc(const RocCurveEstimate& curve);

// Reflection about the line y = 1 - x: point (x, y) -> (1 - y, 1 - x). The
// point estimate, lower band and upper band are each reflected as curves and
// the bands re-interpolated at the reflected abscissae, so band containment
// and monotonicity are preserved. An involution on the point set.
RocCurveEstimate convention_reflect(const RocCurveEstimate& curve);

// Enforces the reporting convention 0.5 <= AUC <= 1.
double auc_orient(double auc);

// FPR grid used to materialize smooth curves: `interior` equally spaced
// points strictly inside (0, 1). Endpoints are added by the estimators.
std::vector<double> default_fpr_grid(int interior = 199);

}  // namespace roc
