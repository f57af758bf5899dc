// Minimal SVG rendering of an ROC curve estimate: shaded confidence band,
// point-estimate curve (staircase steps for the empirical method), diagonal
// reference, axes labeled "1 − Specificity" / "Sensitivity".

#pragma once

#include <string>

#include "roc/curve.hpp"

namespace roc {

std::string render_curve_svg(const RocCurveEstimate& curve, int width = 600,
                             int height = 600, const std::string& title = "");

}  // namespace roc
