#include "roc/svg.hpp"

#include <cstdio>
#include <sstream>

namespace roc {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_curve_svg(const RocCurveEstimate& curve, int width, int height,
                             const std::string& title) {
  const double margin_left = 64, margin_right = 20, margin_top = 36,
               margin_bottom = 56;
  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;

  auto sx = [&](double x) { return margin_left + x * plot_w; };
  auto sy = [&](double y) { return margin_top + (1.0 - y) * plot_h; };

  bool staircase = curve.method == CurveMethod::Empirical;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  if (!title.empty())
    svg << "<text x=\"" << fmt(margin_left + plot_w / 2) << "\" y=\"22\" "
        << "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << escape_xml(title) << "</text>\n";

  // Confidence band as a closed polygon (upper path forward, lower path back).
  if (curve.has_band()) {
    svg << "<polygon fill=\"#c9d6e8\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i)
      svg << fmt(sx(curve.points[i].fpr)) << ',' << fmt(sy(curve.band[i].upper)) << ' ';
    for (std::size_t i = curve.points.size(); i-- > 0;)
      svg << fmt(sx(curve.points[i].fpr)) << ',' << fmt(sy(curve.band[i].lower)) << ' ';
    svg << "\"/>\n";
  }

  // Diagonal reference.
  svg << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
      << fmt(sx(1)) << "\" y2=\"" << fmt(sy(1))
      << "\" stroke=\"#999999\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";

  // Point-estimate curve.
  svg << "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (staircase && i > 0) {
      // right-continuous step: horizontal run then vertical rise
      svg << fmt(sx(curve.points[i].fpr)) << ',' << fmt(sy(curve.points[i - 1].tpr))
          << ' ';
    }
    svg << fmt(sx(curve.points[i].fpr)) << ',' << fmt(sy(curve.points[i].tpr)) << ' ';
  }
  svg << "\"/>\n";

  // Frame and ticks.
  svg << "<rect x=\"" << fmt(margin_left) << "\" y=\"" << fmt(margin_top)
      << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    double v = k / 5.0;
    svg << "<line x1=\"" << fmt(sx(v)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
        << fmt(sx(v)) << "\" y2=\"" << fmt(sy(0) + 5)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt(sx(v)) << "\" y=\"" << fmt(sy(0) + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt(v).substr(0, 3) << "</text>\n";
    svg << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(v)) << "\" x2=\""
        << fmt(sx(0) - 5) << "\" y2=\"" << fmt(sy(v))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt(sx(0) - 9) << "\" y=\"" << fmt(sy(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt(v).substr(0, 3) << "</text>\n";
  }

  svg << "<text x=\"" << fmt(margin_left + plot_w / 2) << "\" y=\""
      << fmt(height - 14.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << "1 \xE2\x88\x92 Specificity</text>\n";
  svg << "<text x=\"18\" y=\"" << fmt(margin_top + plot_h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
      << "transform=\"rotate(-90 18 " << fmt(margin_top + plot_h / 2) << ")\">"
      << "Sensitivity</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace roc
