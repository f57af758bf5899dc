// Nonparametric estimation: empirical CDF/quantile, staircase ROC curve,
// rank-based AUC, the Wilson proportion interval, and the weak/strong null
// tests (Mann-Whitney, two-sample Kolmogorov-Smirnov).

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roc/curve.hpp"
#include "roc/sample.hpp"

namespace roc {

enum class NullKind { Weak, Strong };

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  NullKind null_kind = NullKind::Weak;
  std::string reference_distribution;
};

class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> values);

  std::size_t n() const noexcept { return values_.size(); }
  const std::vector<double>& sorted_values() const noexcept { return values_; }

  // Right-continuous ECDF: fraction of values <= t.
  double cdf(double t) const;

  // Generalized inverse inf{ t : F(t) > p } with the strict inequality;
  // requires 0 <= p < 1 (the infimum is over an empty set at p = 1).
  double quantile(double p) const;

 private:
  std::vector<double> values_;  // ascending
};

double ecdf_eval(const EmpiricalDistribution& dist, double t);
double empirical_quantile(const EmpiricalDistribution& dist, double p);

// Staircase ROC curve with one vertex per distinct pooled value (ties across
// groups make diagonal jumps), augmented with (0,0) and (1,1). Assumes
// canonical orientation.
RocCurveEstimate empirical_roc(const TwoGroupSample& sample);

// Empirical ROC evaluated at arbitrary FPR values (right-continuous in p).
std::vector<double> empirical_roc_at(const TwoGroupSample& sample,
                                     std::span<const double> fpr_grid);

// Rank-based (Mann-Whitney) AUC with average-rank tie handling, reported
// under the convention 0.5 <= AUC <= 1.
double empirical_auc(const TwoGroupSample& sample);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::size_t successes,
                                          std::size_t trials, double level);

// Two-sided Mann-Whitney test of the weak null AUC = 0.5. Exact enumeration
// for n0*n1 <= 400 without ties, otherwise normal approximation with tie and
// continuity corrections.
TestResult mann_whitney_test(const TwoGroupSample& sample);

// Two-sample Kolmogorov-Smirnov test of the strong null ROC(p) = p, with the
// asymptotic Kolmogorov-distribution p-value.
TestResult ks_test(const TwoGroupSample& sample);

}  // namespace roc
