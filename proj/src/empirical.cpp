#include "roc/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "roc/errors.hpp"
#include "roc/special_functions.hpp"

namespace roc {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2)
    throw validation_error("empirical distribution needs at least 2 values");
  std::sort(values_.begin(), values_.end());
}

double EmpiricalDistribution::cdf(double t) const {
  if (!std::isfinite(t)) throw std::domain_error("ecdf: t must be finite");
  auto ub = std::upper_bound(values_.begin(), values_.end(), t);
  return static_cast<double>(ub - values_.begin()) / static_cast<double>(n());
}

double EmpiricalDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0))
    throw std::domain_error("empirical quantile: p must lie in [0, 1)");
  // Smallest sorted index whose ECDF value strictly exceeds p. The ECDF at
  // index k counts the whole tie block containing k, so search on the block
  // ends to keep the predicate monotone.
  double nd = static_cast<double>(n());
  std::size_t lo = 0, hi = n() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto ub = std::upper_bound(values_.begin(), values_.end(), values_[mid]);
    double cdf_mid = static_cast<double>(ub - values_.begin()) / nd;
    if (cdf_mid > p)
      hi = mid;
    else
      lo = mid + 1;
  }
  return values_[lo];
}

double ecdf_eval(const EmpiricalDistribution& dist, double t) { return dist.cdf(t); }

double empirical_quantile(const EmpiricalDistribution& dist, double p) {
  return dist.quantile(p);
}

RocCurveEstimate empirical_roc(const TwoGroupSample& sample) {
  EmpiricalDistribution f0(sample.reference);
  EmpiricalDistribution f1(sample.comparator);

  std::vector<double> pooled;
  pooled.reserve(sample.n());
  pooled.insert(pooled.end(), sample.reference.begin(), sample.reference.end());
  pooled.insert(pooled.end(), sample.comparator.begin(), sample.comparator.end());
  std::sort(pooled.begin(), pooled.end());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());

  RocCurveEstimate curve;
  curve.method = CurveMethod::Empirical;
  curve.points.reserve(pooled.size() + 2);
  curve.points.push_back(RocPoint{0.0, 0.0, std::nullopt});
  for (double c : pooled)
    curve.points.push_back(RocPoint{f0.cdf(c), f1.cdf(c), c});
  if (curve.points.back().fpr != 1.0 || curve.points.back().tpr != 1.0)
    curve.points.push_back(RocPoint{1.0, 1.0, std::nullopt});
  return curve;
}

std::vector<double> empirical_roc_at(const TwoGroupSample& sample,
                                     std::span<const double> fpr_grid) {
  EmpiricalDistribution f0(sample.reference);
  EmpiricalDistribution f1(sample.comparator);
  std::vector<double> out(fpr_grid.size());
  for (std::size_t i = 0; i < fpr_grid.size(); ++i)
    out[i] = f1.cdf(f0.quantile(fpr_grid[i]));
  return out;
}

namespace {

// Sum of average ranks of the reference group within the pooled sample.
double reference_rank_sum(const TwoGroupSample& sample) {
  struct Entry {
    double value;
    bool is_reference;
  };
  std::vector<Entry> pooled;
  pooled.reserve(sample.n());
  for (double v : sample.reference) pooled.push_back({v, true});
  for (double v : sample.comparator) pooled.push_back({v, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const Entry& a, const Entry& b) { return a.value < b.value; });

  double rank_sum = 0.0;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
    // ranks i+1 .. j (1-based); average is exactly representable (half-integer)
    double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k)
      if (pooled[k].is_reference) rank_sum += avg_rank;
    i = j;
  }
  return rank_sum;
}

}  // namespace

double empirical_auc(const TwoGroupSample& sample) {
  double n0 = static_cast<double>(sample.n0());
  double n1 = static_cast<double>(sample.n1());
  double r = reference_rank_sum(sample);
  // Rank identity: U0 = R - n0(n0+1)/2 counts reference-greater pairs with
  // half weight for ties; both terms are exact half-integers. The reported
  // value folds theta = U0/(n0*n1) into [0.5, 1].
  double u0 = r - 0.5 * n0 * (n0 + 1.0);
  double theta = u0 / (n0 * n1);
  return auc_orient(theta);
}

std::pair<double, double> wilson_interval(std::size_t successes,
                                          std::size_t trials, double level) {
  if (trials == 0) throw std::domain_error("wilson_interval: trials must be >= 1");
  if (successes > trials)
    throw std::domain_error("wilson_interval: successes exceed trials");
  if (!(level > 0.0 && level < 1.0))
    throw std::domain_error("wilson_interval: level must lie in (0, 1)");
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  double z = normal_quantile(0.5 * (1.0 + level));
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  double lower = (successes == 0) ? 0.0 : std::max(0.0, center - half);
  double upper = (successes == trials) ? 1.0 : std::min(1.0, center + half);
  return {lower, upper};
}

namespace {

bool pooled_has_ties(const TwoGroupSample& sample) {
  std::vector<double> pooled;
  pooled.reserve(sample.n());
  pooled.insert(pooled.end(), sample.reference.begin(), sample.reference.end());
  pooled.insert(pooled.end(), sample.comparator.begin(), sample.comparator.end());
  std::sort(pooled.begin(), pooled.end());
  return std::adjacent_find(pooled.begin(), pooled.end()) != pooled.end();
}

// Null distribution counts of the Mann-Whitney U statistic: f[u] = number of
// group assignments with U = u, via the standard combinatorial recurrence.
std::vector<double> mann_whitney_counts(std::size_t m, std::size_t n) {
  std::size_t umax = m * n;
  // f(m, n, u) = f(m-1, n, u-n) + f(m, n-1, u); roll over m.
  std::vector<std::vector<double>> table(n + 1, std::vector<double>(umax + 1, 0.0));
  for (std::size_t j = 0; j <= n; ++j) table[j][0] = 1.0;  // m = 0
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<std::vector<double>> next(n + 1,
                                          std::vector<double>(umax + 1, 0.0));
    next[0][0] = 1.0;
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t u = 0; u <= i * j; ++u) {
        double a = (u >= j) ? table[j][u - j] : 0.0;  // f(i-1, j, u-j)
        double b = next[j - 1][u];                    // f(i, j-1, u)
        next[j][u] = a + b;
      }
    table = std::move(next);
  }
  return table[n];
}

double kolmogorov_sf(double x) {
  // P(K > x) for the asymptotic Kolmogorov distribution; the two standard
  // series, switched at x = 1 for fast convergence.
  if (x <= 0.0) return 1.0;
  if (x < 1.0) {
    double t = std::exp(-M_PI * M_PI / (8.0 * x * x));
    double sum = 0.0;
    for (int k = 1; k <= 21; k += 2) {  // odd k
      double term = std::pow(t, static_cast<double>(k) * k);
      sum += term;
      if (term < 1e-18) break;
    }
    double cdf = std::sqrt(2.0 * M_PI) / x * sum;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = sign * std::exp(-2.0 * k * k * x * x);
    sum += term;
    if (std::fabs(term) < 1e-18) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

TestResult mann_whitney_test(const TwoGroupSample& sample) {
  double n0 = static_cast<double>(sample.n0());
  double n1 = static_cast<double>(sample.n1());
  double r = reference_rank_sum(sample);
  double u0 = r - 0.5 * n0 * (n0 + 1.0);  // reference-greater pairs, ties half

  TestResult result;
  result.statistic = u0;
  result.null_kind = NullKind::Weak;

  bool ties = pooled_has_ties(sample);
  if (!ties && sample.n0() * sample.n1() <= 400) {
    auto counts = mann_whitney_counts(sample.n0(), sample.n1());
    double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    std::size_t u = static_cast<std::size_t>(std::llround(u0));
    double lower = 0.0, upper = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (k <= u) lower += counts[k];
      if (k >= u) upper += counts[k];
    }
    result.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / total);
    result.reference_distribution =
        "exact Mann-Whitney null distribution (n0=" + std::to_string(sample.n0()) +
        ", n1=" + std::to_string(sample.n1()) + ")";
    return result;
  }

  // Normal approximation with tie correction and continuity correction.
  double n = n0 + n1;
  double mean = 0.5 * n0 * n1;
  double tie_term = 0.0;
  {
    std::vector<double> pooled;
    pooled.reserve(sample.n());
    pooled.insert(pooled.end(), sample.reference.begin(), sample.reference.end());
    pooled.insert(pooled.end(), sample.comparator.begin(), sample.comparator.end());
    std::sort(pooled.begin(), pooled.end());
    std::size_t i = 0;
    while (i < pooled.size()) {
      std::size_t j = i;
      while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
      double t = static_cast<double>(j - i);
      tie_term += t * t * t - t;
      i = j;
    }
  }
  double var = n0 * n1 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (var <= 0.0) {
    // every pooled value identical; the statistic is degenerate at its mean
    result.p_value = 1.0;
    result.reference_distribution = "degenerate (all pooled values tied)";
    return result;
  }
  double diff = u0 - mean;
  double cc = (diff > 0.0) ? -0.5 : (diff < 0.0 ? 0.5 : 0.0);
  double z = (diff + cc) / std::sqrt(var);
  result.p_value = std::min(1.0, 2.0 * normal_cdf(-std::fabs(z)));
  result.reference_distribution =
      "normal approximation with tie and continuity corrections";
  return result;
}

TestResult ks_test(const TwoGroupSample& sample) {
  std::vector<double> r = sample.reference;
  std::vector<double> c = sample.comparator;
  std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());

  double n0 = static_cast<double>(r.size());
  double n1 = static_cast<double>(c.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < r.size() && j < c.size()) {
    double v = std::min(r[i], c[j]);
    while (i < r.size() && r[i] <= v) ++i;
    while (j < c.size() && c[j] <= v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / n0 -
                              static_cast<double>(j) / n1));
  }

  double n_eff = n0 * n1 / (n0 + n1);
  TestResult result;
  result.statistic = d;
  result.null_kind = NullKind::Strong;
  result.p_value = kolmogorov_sf(std::sqrt(n_eff) * d);
  result.reference_distribution = "asymptotic Kolmogorov distribution";
  return result;
}

}  // namespace roc
