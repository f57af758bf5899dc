#include "roc/curve.hpp"

#include <algorithm>
#include <cmath>

#include "roc/errors.hpp"

namespace roc {

std::string curve_method_name(CurveMethod m) {
  switch (m) {
    case CurveMethod::Empirical: return "empirical";
    case CurveMethod::ParamBiexp: return "param-biexp";
    case CurveMethod::ParamBinorm: return "param-binorm";
    case CurveMethod::SemiBiexp: return "semi-biexp";
    case CurveMethod::SemiBinorm: return "semi-binorm";
  }
  return "unknown";
}

void check_curve_invariants(const RocCurveEstimate& curve) {
  const auto& pts = curve.points;
  if (pts.size() < 2) throw validation_error("curve: fewer than two points");
  if (pts.front().fpr != 0.0 || pts.front().tpr != 0.0)
    throw validation_error("curve: first point must be (0,0)");
  if (pts.back().fpr != 1.0 || pts.back().tpr != 1.0)
    throw validation_error("curve: last point must be (1,1)");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].fpr < 0.0 || pts[i].fpr > 1.0 || pts[i].tpr < 0.0 || pts[i].tpr > 1.0)
      throw validation_error("curve: point outside unit square");
    if (i > 0) {
      if (pts[i].fpr < pts[i - 1].fpr) throw validation_error("curve: fpr not sorted");
      if (pts[i].tpr < pts[i - 1].tpr) throw validation_error("curve: tpr not monotone");
    }
  }
  if (!curve.band.empty()) {
    if (curve.band.size() != pts.size())
      throw validation_error("curve: band size mismatch");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& b = curve.band[i];
      if (b.lower < 0.0 || b.upper > 1.0 || b.lower > b.upper)
        throw validation_error("curve: malformed band interval");
      if (b.lower > pts[i].tpr || b.upper < pts[i].tpr)
        throw validation_error("curve: band does not contain point estimate");
    }
  }
}

double trapezoid_auc(const RocCurveEstimate& curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    area += (curve.points[i].fpr - curve.points[i - 1].fpr) *
            0.5 * (curve.points[i].tpr + curve.points[i - 1].tpr);
  }
  return area;
}

namespace {

struct XY {
  double x, y;
};

// Piecewise-linear evaluation of a nondecreasing point set, flat beyond the
// ends. Duplicated abscissae (vertical jumps) resolve to the lower or upper
// envelope depending on which band curve is being rebuilt.
double eval_monotone(const std::vector<XY>& pts, double x, bool lower_envelope) {
  if (pts.empty()) return 0.0;
  if (x <= pts.front().x) return pts.front().y;
  if (x >= pts.back().x) return pts.back().y;
  auto it = std::lower_bound(pts.begin(), pts.end(), x,
                             [](const XY& a, double v) { return a.x < v; });
  // it->x >= x, it != begin
  auto hi = it;
  auto lo = it - 1;
  if (hi->x == x) {
    // walk the duplicate block toward the requested envelope
    if (lower_envelope) {
      while (hi != pts.begin() && (hi - 1)->x == x) --hi;
    } else {
      while (hi + 1 != pts.end() && (hi + 1)->x == x) ++hi;
    }
    return hi->y;
  }
  double t = (x - lo->x) / (hi->x - lo->x);
  return lo->y + t * (hi->y - lo->y);
}

std::vector<XY> reflect_as_curve(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  std::vector<XY> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    out[i] = XY{1.0 - ys[i], 1.0 - xs[i]};
  std::sort(out.begin(), out.end(), [](const XY& a, const XY& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  return out;
}

}  // namespace

RocCurveEstimate convention_reflect(const RocCurveEstimate& curve) {
  RocCurveEstimate out;
  out.method = curve.method;
  out.level = curve.level;
  out.band_failures = curve.band_failures;
  out.warnings = curve.warnings;

  out.points.reserve(curve.points.size());
  for (auto it = curve.points.rbegin(); it != curve.points.rend(); ++it)
    out.points.push_back(RocPoint{1.0 - it->tpr, 1.0 - it->fpr, it->threshold});
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const RocPoint& a, const RocPoint& b) { return a.fpr < b.fpr; });

  if (curve.has_band()) {
    std::vector<double> ps(curve.points.size()), lo(curve.points.size()),
        hi(curve.points.size());
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      ps[i] = curve.points[i].fpr;
      lo[i] = curve.band[i].lower;
      hi[i] = curve.band[i].upper;
    }
    // Reflecting preserves the vertical ordering of monotone curves, so the
    // old lower band maps to the new lower band and likewise for the upper.
    std::vector<XY> lower_curve = reflect_as_curve(ps, lo);
    std::vector<XY> upper_curve = reflect_as_curve(ps, hi);
    out.band.resize(out.points.size());
    for (std::size_t i = 0; i < out.points.size(); ++i) {
      double q = out.points[i].fpr;
      double y = out.points[i].tpr;
      double l = eval_monotone(lower_curve, q, /*lower_envelope=*/true);
      double u = eval_monotone(upper_curve, q, /*lower_envelope=*/false);
      out.band[i] = BandInterval{std::clamp(std::min(l, y), 0.0, 1.0),
                                 std::clamp(std::max(u, y), 0.0, 1.0)};
    }
  }
  return out;
}

double auc_orient(double auc) { return std::max(auc, 1.0 - auc); }

std::vector<double> default_fpr_grid(int interior) {
  if (interior < 1)
    throw validation_error("fpr grid needs at least one interior point");
  std::vector<double> grid(static_cast<std::size_t>(interior));
  for (int k = 1; k <= interior; ++k)
    grid[static_cast<std::size_t>(k - 1)] =
        static_cast<double>(k) / static_cast<double>(interior + 1);
  return grid;
}

}  // namespace roc
