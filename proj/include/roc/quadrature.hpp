// Adaptive quadrature over the unit interval.

#pragma once

#include <functional>

namespace roc {

// Integrates f over [0, 1] with globally adaptive Gauss-Kronrod (G7/K15)
// refinement to an absolute tolerance (default 1e-9). Nodes are clamped to
// [eps, 1 - eps] with eps = 1e-12 so integrands with infinite-slope or
// undefined endpoints (binormal ROC curves) are never evaluated at 0 or 1.
// Throws quadrature_error carrying the partial estimate if the tolerance is
// not reached within the panel budget.
double integrate_unit_interval(const std::function<double(double)>& f,
                               double abs_tol = 1e-9);

}  // namespace roc
