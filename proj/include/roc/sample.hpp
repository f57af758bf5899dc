// Two-group sample container and orientation conventions.
//
// The canonical convention throughout the library: lower measurement values
// are less desirable, the reference group is group 0, and the ROC curve is
// ROC(p) = F1(F0^-1(p)) with AUC = P(Y0 > Y1). Samples declared with the
// opposite convention are canonicalized by negating every value, which maps
// S1(S0^-1(p)) onto the canonical form; estimators assume canonical input.

#pragma once

#include <cstddef>
#include <vector>

namespace roc {

enum class Orientation {
  LowerLessDesirable,   // canonical
  HigherLessDesirable,  // negated on canonicalization
};

struct TwoGroupSample {
  std::vector<double> reference;   // group 0
  std::vector<double> comparator;  // group 1
  Orientation orientation = Orientation::LowerLessDesirable;

  std::size_t n0() const noexcept { return reference.size(); }
  std::size_t n1() const noexcept { return comparator.size(); }
  std::size_t n() const noexcept { return n0() + n1(); }
};

// Validates group sizes (>= 2 each) and finiteness of every value.
// Throws validation_error otherwise.
TwoGroupSample validate_sample(std::vector<double> reference,
                               std::vector<double> comparator,
                               Orientation orientation);

// Returns a sample in the canonical orientation; idempotent.
TwoGroupSample canonical_orientation(const TwoGroupSample& sample);

// Tie-adjusted P(Y0 > Y1) estimate under the canonical reading of the data
// as given (no reorientation): (#{y0 > y1} + #{y0 = y1}/2) / (n0*n1).
// Used for auto-orientation and as the empirical AUC kernel.
double pair_order_statistic(const TwoGroupSample& sample);

// Resolves the "auto" convention: keeps LowerLessDesirable when the pairwise
// ordering statistic is already >= 0.5, otherwise declares the sample
// HigherLessDesirable. Returns the canonicalized sample.
TwoGroupSample resolve_auto_orientation(const TwoGroupSample& sample);

}  // namespace roc
