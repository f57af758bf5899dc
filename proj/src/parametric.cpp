#include "roc/parametric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "roc/errors.hpp"
#include "roc/quadrature.hpp"
#include "roc/special_functions.hpp"

namespace roc {

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Sum of squared deviations about the group mean.
double ss_about_mean(const std::vector<double>& v, double m) {
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss;
}

void require_positive_support(const TwoGroupSample& sample) {
  for (double v : sample.reference)
    if (!(v > 0.0))
      throw std::domain_error("exponential model requires positive support");
  for (double v : sample.comparator)
    if (!(v > 0.0))
      throw std::domain_error("exponential model requires positive support");
}

}  // namespace

double BiexpFit::roc(double p) const {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return 1.0 - std::pow(1.0 - p, alpha);
}

double BinormFit::roc(double p) const {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return normal_cdf(beta0 + beta1 * normal_quantile(p));
}

BiexpFit fit_biexponential(const TwoGroupSample& sample) {
  require_positive_support(sample);
  BiexpFit fit;
  fit.n0 = sample.n0();
  fit.n1 = sample.n1();
  fit.lambda0_hat = 1.0 / mean(sample.reference);
  fit.lambda1_hat = 1.0 / mean(sample.comparator);
  fit.alpha = fit.lambda1_hat / fit.lambda0_hat;
  return fit;
}

CurveInterval biexp_curve_ci(const BiexpFit& fit, double p, double level) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("biexp_curve_ci: p must lie in (0, 1)");
  double z = normal_quantile(0.5 * (1.0 + level));
  double se = std::sqrt(1.0 / static_cast<double>(fit.n0) +
                        1.0 / static_cast<double>(fit.n1));
  double log1mp = std::log1p(-p);
  CurveInterval ci;
  ci.point = 1.0 - std::exp(fit.alpha * log1mp);
  ci.lower = 1.0 - std::exp(fit.alpha * std::exp(-z * se) * log1mp);
  ci.upper = 1.0 - std::exp(fit.alpha * std::exp(z * se) * log1mp);
  ci.lower = std::clamp(ci.lower, 0.0, 1.0);
  ci.upper = std::clamp(ci.upper, 0.0, 1.0);
  return ci;
}

double biexp_auc(const BiexpFit& fit) { return 1.0 - 1.0 / (fit.alpha + 1.0); }

TestResult exponential_lrt(const TwoGroupSample& sample) {
  require_positive_support(sample);
  double n0 = static_cast<double>(sample.n0());
  double n1 = static_cast<double>(sample.n1());
  double n = n0 + n1;
  double sum0 = std::accumulate(sample.reference.begin(), sample.reference.end(), 0.0);
  double sum1 = std::accumulate(sample.comparator.begin(), sample.comparator.end(), 0.0);
  double l0 = n0 / sum0;
  double l1 = n1 / sum1;
  double l = n / (sum0 + sum1);
  double deviance = 2.0 * (n0 * std::log(l0) + n1 * std::log(l1) - n * std::log(l));
  deviance = std::max(0.0, deviance);  // guard fp spill at l0 == l1

  TestResult result;
  result.statistic = deviance;
  result.p_value = chi2_sf(deviance, 1);
  result.null_kind = NullKind::Strong;
  result.reference_distribution =
      "chi-square(1); weak and strong nulls coincide under the exponential model";
  return result;
}

BinormFit fit_binormal(const TwoGroupSample& sample) {
  BinormFit fit;
  fit.n0 = sample.n0();
  fit.n1 = sample.n1();
  double n0 = static_cast<double>(fit.n0);
  double n1 = static_cast<double>(fit.n1);
  fit.mu0_hat = mean(sample.reference);
  fit.mu1_hat = mean(sample.comparator);
  double ss0 = ss_about_mean(sample.reference, fit.mu0_hat);
  double ss1 = ss_about_mean(sample.comparator, fit.mu1_hat);
  if (!(ss0 > 0.0) || !(ss1 > 0.0))
    throw validation_error("binormal fit degenerate: zero variance in a group");
  fit.s0 = std::sqrt(ss0 / (n0 - 1.0));
  fit.s1 = std::sqrt(ss1 / (n1 - 1.0));
  fit.beta0 = (fit.mu0_hat - fit.mu1_hat) / fit.s1;
  fit.beta1 = fit.s0 / fit.s1;

  double v0 = fit.s0 * fit.s0 / n0;
  double v1 = fit.s1 * fit.s1 / n1;
  fit.welch_df = (v0 + v1) * (v0 + v1) /
                 (v0 * v0 / (n0 - 1.0) + v1 * v1 / (n1 - 1.0));
  return fit;
}

CurveInterval binorm_curve_ci(const BinormFit& fit, double p, double level) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("binorm_curve_ci: p must lie in (0, 1)");
  double t = t_quantile(0.5 * (1.0 + level), fit.welch_df);
  double zp = normal_quantile(p);
  double delta = fit.mu0_hat - fit.mu1_hat;
  double half = t * std::sqrt(fit.s0 * fit.s0 / static_cast<double>(fit.n0) +
                              fit.s1 * fit.s1 / static_cast<double>(fit.n1));
  CurveInterval ci;
  ci.point = normal_cdf((delta + fit.s0 * zp) / fit.s1);
  ci.lower = normal_cdf((delta + fit.s0 * zp - half) / fit.s1);
  ci.upper = normal_cdf((delta + fit.s0 * zp + half) / fit.s1);
  return ci;
}

double binorm_auc(const BinormFit& fit) {
  return integrate_unit_interval([&](double p) { return fit.roc(p); });
}

TestResult welch_t_test(const TwoGroupSample& sample) {
  BinormFit fit = fit_binormal(sample);  // reuses the degeneracy checks
  double se = std::sqrt(fit.s0 * fit.s0 / static_cast<double>(fit.n0) +
                        fit.s1 * fit.s1 / static_cast<double>(fit.n1));
  double t = (fit.mu0_hat - fit.mu1_hat) / se;
  TestResult result;
  result.statistic = t;
  result.p_value = std::min(1.0, 2.0 * (1.0 - student_t_cdf(std::fabs(t), fit.welch_df)));
  result.null_kind = NullKind::Weak;
  result.reference_distribution =
      "Student t, Welch-Satterthwaite df = " + std::to_string(fit.welch_df);
  return result;
}

TestResult normal_lrt(const TwoGroupSample& sample) {
  double n0 = static_cast<double>(sample.n0());
  double n1 = static_cast<double>(sample.n1());
  double n = n0 + n1;
  double m0 = mean(sample.reference);
  double m1 = mean(sample.comparator);
  // MLE variances (divisor n), as required for the chi-square(2) reference.
  double v0 = ss_about_mean(sample.reference, m0) / n0;
  double v1 = ss_about_mean(sample.comparator, m1) / n1;
  if (!(v0 > 0.0) || !(v1 > 0.0))
    throw validation_error("normal LRT degenerate: zero variance in a group");
  // Pooled MLE under the strong null: common mean and common variance.
  double m = (n0 * m0 + n1 * m1) / n;
  double v = (ss_about_mean(sample.reference, m) + ss_about_mean(sample.comparator, m)) / n;

  double statistic =
      n * std::log(v) - n0 * std::log(v0) - n1 * std::log(v1);
  statistic = std::max(0.0, statistic);

  TestResult result;
  result.statistic = statistic;
  result.p_value = chi2_sf(statistic, 2);
  result.null_kind = NullKind::Strong;
  result.reference_distribution = "chi-square(2)";
  return result;
}

namespace {

RocCurveEstimate materialize(const std::vector<double>& grid, double level,
                             CurveMethod method,
                             const std::function<CurveInterval(double)>& ci_at) {
  RocCurveEstimate curve;
  curve.method = method;
  curve.level = level;
  curve.points.reserve(grid.size() + 2);
  curve.band.reserve(grid.size() + 2);
  curve.points.push_back(RocPoint{0.0, 0.0, std::nullopt});
  curve.band.push_back(BandInterval{0.0, 0.0});
  for (double p : grid) {
    CurveInterval ci = ci_at(p);
    curve.points.push_back(RocPoint{p, ci.point, std::nullopt});
    curve.band.push_back(BandInterval{std::min(ci.lower, ci.point),
                                      std::max(ci.upper, ci.point)});
  }
  curve.points.push_back(RocPoint{1.0, 1.0, std::nullopt});
  curve.band.push_back(BandInterval{1.0, 1.0});
  return curve;
}

}  // namespace

RocCurveEstimate biexp_curve_on_grid(const BiexpFit& fit,
                                     const std::vector<double>& fpr_grid,
                                     double level) {
  return materialize(fpr_grid, level, CurveMethod::ParamBiexp,
                     [&](double p) { return biexp_curve_ci(fit, p, level); });
}

RocCurveEstimate binorm_curve_on_grid(const BinormFit& fit,
                                      const std::vector<double>& fpr_grid,
                                      double level) {
  return materialize(fpr_grid, level, CurveMethod::ParamBinorm,
                     [&](double p) { return binorm_curve_ci(fit, p, level); });
}

}  // namespace roc
