#include "roc/sample.hpp"

#include <algorithm>
#include <cmath>

#include "roc/errors.hpp"

namespace roc {

TwoGroupSample validate_sample(std::vector<double> reference,
                               std::vector<double> comparator,
                               Orientation orientation) {
  if (reference.size() < 2)
    throw validation_error("reference group too small (need at least 2 observations)");
  if (comparator.size() < 2)
    throw validation_error("comparator group too small (need at least 2 observations)");
  for (double v : reference)
    if (!std::isfinite(v)) throw validation_error("non-finite value in reference group");
  for (double v : comparator)
    if (!std::isfinite(v)) throw validation_error("non-finite value in comparator group");
  return TwoGroupSample{std::move(reference), std::move(comparator), orientation};
}

TwoGroupSample canonical_orientation(const TwoGroupSample& sample) {
  if (sample.orientation == Orientation::LowerLessDesirable) return sample;
  TwoGroupSample out = sample;
  for (double& v : out.reference) v = -v;
  for (double& v : out.comparator) v = -v;
  out.orientation = Orientation::LowerLessDesirable;
  return out;
}

double pair_order_statistic(const TwoGroupSample& sample) {
  // O(n log n) via sorted comparator: #{y1 < y0} + #{y1 == y0}/2 per row.
  std::vector<double> sorted_cmp = sample.comparator;
  std::sort(sorted_cmp.begin(), sorted_cmp.end());
  double numer = 0.0;
  for (double y0 : sample.reference) {
    auto lo = std::lower_bound(sorted_cmp.begin(), sorted_cmp.end(), y0);
    auto hi = std::upper_bound(lo, sorted_cmp.end(), y0);
    numer += static_cast<double>(lo - sorted_cmp.begin()) +
             0.5 * static_cast<double>(hi - lo);
  }
  return numer / (static_cast<double>(sample.n0()) * static_cast<double>(sample.n1()));
}

TwoGroupSample resolve_auto_orientation(const TwoGroupSample& sample) {
  TwoGroupSample as_canonical = sample;
  as_canonical.orientation = Orientation::LowerLessDesirable;
  if (pair_order_statistic(as_canonical) >= 0.5) return as_canonical;
  as_canonical.orientation = Orientation::HigherLessDesirable;
  return canonical_orientation(as_canonical);
}

}  // namespace roc
