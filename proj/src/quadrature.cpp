#include "roc/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "roc/errors.hpp"

namespace roc {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1] (QUADPACK QK15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEndpointEps = 1e-12;

struct Panel {
  double a, b;
  double integral;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  double half = 0.5 * (b - a);
  double center = 0.5 * (a + b);
  auto eval = [&](double t) {
    double x = center + half * t;
    if (x < kEndpointEps) x = kEndpointEps;
    if (x > 1.0 - kEndpointEps) x = 1.0 - kEndpointEps;
    return f(x);
  };

  double fc = eval(kXgk[7]);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double sum = eval(kXgk[i]) + eval(-kXgk[i]);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

double integrate_unit_interval(const std::function<double(double)>& f,
                               double abs_tol) {
  constexpr int max_panels = 4000;

  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, 0.0, 1.0));
  double total = queue.top().integral;
  double total_error = queue.top().error;
  int panels = 1;

  while (total_error > abs_tol && panels < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval exhausted at double resolution; keep its contribution
      queue.push(Panel{worst.a, worst.b, worst.integral, 0.0});
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  if (!(total_error <= abs_tol) || !std::isfinite(total)) {
    throw quadrature_error(
        "integrate_unit_interval: tolerance not reached after maximum refinement",
        total, total_error);
  }
  return total;
}

}  // namespace roc
