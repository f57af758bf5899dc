#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "roc/errors.hpp"
#include "roc/parametric.hpp"
#include "roc/rng.hpp"
#include "roc/special_functions.hpp"

using namespace roc;

namespace {

TwoGroupSample make_sample(std::vector<double> y0, std::vector<double> y1) {
  return validate_sample(std::move(y0), std::move(y1),
                         Orientation::LowerLessDesirable);
}

TwoGroupSample exp_sample(std::size_t n0, std::size_t n1, double l0, double l1,
                          std::uint64_t seed, std::uint64_t stream = 0) {
  RngStream rng(seed, stream);
  std::vector<double> y0, y1;
  for (std::size_t i = 0; i < n0; ++i) y0.push_back(rng.next_exponential(l0));
  for (std::size_t j = 0; j < n1; ++j) y1.push_back(rng.next_exponential(l1));
  return make_sample(y0, y1);
}

TwoGroupSample norm_sample(std::size_t n0, std::size_t n1, double mu0, double mu1,
                           std::uint64_t seed, std::uint64_t stream = 0,
                           double sd0 = 1.0, double sd1 = 1.0) {
  RngStream rng(seed, stream);
  std::vector<double> y0, y1;
  for (std::size_t i = 0; i < n0; ++i) y0.push_back(mu0 + sd0 * rng.next_normal());
  for (std::size_t j = 0; j < n1; ++j) y1.push_back(mu1 + sd1 * rng.next_normal());
  return make_sample(y0, y1);
}

}  // namespace

TEST_CASE("fit_biexponential: rate MLEs and alpha") {
  TwoGroupSample s = make_sample({0.5, 1.0, 1.5}, {0.25, 0.25});  // means 1, 0.25
  BiexpFit fit = fit_biexponential(s);
  CHECK(fit.alpha == doctest::Approx(4.0));
  CHECK(fit.lambda0_hat == doctest::Approx(1.0));
  CHECK(fit.lambda1_hat == doctest::Approx(4.0));

  TwoGroupSample eq = make_sample({1, 2, 3}, {2, 2, 2});  // equal means
  CHECK(fit_biexponential(eq).alpha == doctest::Approx(1.0));
  CHECK(fit_biexponential(eq).roc(0.37) == doctest::Approx(0.37));

  CHECK_THROWS_WITH_AS((void)fit_biexponential(make_sample({1, -2}, {1, 1})),
                       doctest::Contains("positive support"), std::domain_error);
  CHECK_THROWS_AS((void)fit_biexponential(make_sample({1, 2}, {0.0, 1})),
                  std::domain_error);
}

TEST_CASE("biexp_curve_ci: formula anchors, ordering, shrinking width") {
  BiexpFit unit;
  unit.alpha = 1.0;
  unit.n0 = unit.n1 = 20;
  CurveInterval at_p = biexp_curve_ci(unit, 0.42, 0.95);
  CHECK(at_p.point == doctest::Approx(0.42));
  CHECK(at_p.lower < 0.42);
  CHECK(at_p.upper > 0.42);

  BiexpFit fit;
  fit.alpha = 4.0;
  fit.n0 = fit.n1 = 30;
  CurveInterval ci = biexp_curve_ci(fit, 0.2, 0.95);
  CHECK(ci.point == doctest::Approx(0.5904).epsilon(1e-4));
  // frozen from the displayed transform: 1-0.8^(4*exp(-+1.95996*sqrt(1/15)))
  CHECK(ci.lower == doctest::Approx(0.4161449538).epsilon(1e-6));
  CHECK(ci.upper == doctest::Approx(0.7724879019).epsilon(1e-6));

  BiexpFit big = fit;
  big.n0 = big.n1 = 30000;
  CurveInterval tight = biexp_curve_ci(big, 0.2, 0.95);
  CHECK(tight.upper - tight.lower < ci.upper - ci.lower);

  // point estimate monotone in p, endpoints approached
  double prev = -1.0;
  for (double p = 0.001; p < 1.0; p += 0.013) {
    CurveInterval c = biexp_curve_ci(fit, p, 0.95);
    CHECK(c.point > prev);
    CHECK(c.lower <= c.point);
    CHECK(c.point <= c.upper);
    prev = c.point;
  }
  CHECK(fit.roc(1e-12) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fit.roc(1.0 - 1e-14) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("biexponential outputs depend on data only through alpha and sizes") {
  TwoGroupSample s = exp_sample(25, 30, 1.0, 4.0, 101);

  // power-of-two rescaling is exact in floating point: bit-identical outputs
  TwoGroupSample pow2 = s;
  for (auto& v : pow2.reference) v *= 32.0;
  for (auto& v : pow2.comparator) v *= 32.0;
  BiexpFit f1 = fit_biexponential(s);
  BiexpFit f2 = fit_biexponential(pow2);
  CHECK(f1.alpha == f2.alpha);
  for (double p : {0.1, 0.33, 0.8}) {
    CurveInterval a = biexp_curve_ci(f1, p, 0.95);
    CurveInterval b = biexp_curve_ci(f2, p, 0.95);
    CHECK(a.point == b.point);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
  }

  // arbitrary rescaling agrees to rounding noise
  TwoGroupSample scaled = s;
  for (auto& v : scaled.reference) v *= 37.5;
  for (auto& v : scaled.comparator) v *= 37.5;
  BiexpFit f3 = fit_biexponential(scaled);
  CHECK(f1.alpha == doctest::Approx(f3.alpha).epsilon(1e-14));

  TestResult t1 = exponential_lrt(s);
  TestResult t2 = exponential_lrt(scaled);
  CHECK(t1.statistic == doctest::Approx(t2.statistic).epsilon(1e-10));
}

TEST_CASE("biexp_auc: closed form") {
  BiexpFit fit;
  fit.alpha = 1.0;
  CHECK(biexp_auc(fit) == doctest::Approx(0.5));
  fit.alpha = 4.0;
  CHECK(biexp_auc(fit) == doctest::Approx(0.8));
  fit.alpha = 2.72;
  CHECK(biexp_auc(fit) == doctest::Approx(0.731).epsilon(1e-3));
}

TEST_CASE("exponential_lrt: null behavior and Monte-Carlo power") {
  TwoGroupSample eq = make_sample({1, 2, 3, 2}, {2, 1, 3, 2});
  TestResult t = exponential_lrt(eq);
  CHECK(t.statistic == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.p_value == doctest::Approx(1.0).epsilon(1e-9));

  // alpha = 4, n = 60 + 60: essentially always rejected at the 5% level
  int rejects = 0;
  const int m = 500;
  for (int rep = 0; rep < m; ++rep) {
    TwoGroupSample s = exp_sample(60, 60, 1.0, 4.0, 555, rep + 1);
    if (exponential_lrt(s).p_value < 0.05) ++rejects;
  }
  CHECK(rejects > static_cast<int>(0.99 * m));
}

TEST_CASE("fit_binormal: definitions and Welch df") {
  // delta = 1.5 with unit SDs
  TwoGroupSample s = make_sample({4.5, 5.5, 6.5}, {3.0, 4.0, 5.0});
  BinormFit fit = fit_binormal(s);
  CHECK(fit.beta0 == doctest::Approx(1.5));
  CHECK(fit.beta1 == doctest::Approx(1.0));

  // equal unit variances at n0 = n1 = 30 collapse to n0 + n1 - 2
  RngStream rng(71, 0);
  std::vector<double> y0(30), y1(30);
  for (auto& v : y0) v = rng.next_normal();
  for (auto& v : y1) v = rng.next_normal();
  // force exact unit sample variances and zero means
  auto standardize = [](std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    double s = std::sqrt(ss / (v.size() - 1));
    for (auto& x : v) x = (x - m) / s;
  };
  standardize(y0);
  standardize(y1);
  BinormFit f = fit_binormal(make_sample(y0, y1));
  CHECK(f.welch_df == doctest::Approx(58.0).epsilon(1e-9));

  CHECK_THROWS_AS((void)fit_binormal(make_sample({1, 1, 1}, {1, 2, 3})),
                  validation_error);
}

TEST_CASE("binorm_curve_ci: table anchors and ordering") {
  BinormFit fit;
  fit.beta0 = 0.0;
  fit.beta1 = 1.0;
  fit.mu0_hat = 0.0;
  fit.mu1_hat = 0.0;
  fit.s0 = fit.s1 = 1.0;
  fit.welch_df = 58.0;
  fit.n0 = fit.n1 = 30;
  for (double p : {0.05, 0.3, 0.62, 0.9})
    CHECK(binorm_curve_ci(fit, p, 0.95).point == doctest::Approx(p).epsilon(1e-12));

  BinormFit sep = fit;
  sep.mu0_hat = 5.5;
  sep.mu1_hat = 4.0;  // delta = 1.5, unit SDs
  CHECK(binorm_curve_ci(sep, 0.0670, 0.95).point == doctest::Approx(0.50).epsilon(0.01 / 0.5));
  CHECK(binorm_curve_ci(sep, 0.0027, 0.95).point == doctest::Approx(0.10).epsilon(0.01 / 0.1));

  double prev = -1.0;
  for (double p = 0.001; p < 1.0; p += 0.0131) {
    CurveInterval c = binorm_curve_ci(sep, p, 0.95);
    CHECK(c.point > prev);
    CHECK(c.lower <= c.point);
    CHECK(c.point <= c.upper);
    CHECK(c.lower >= 0.0);
    CHECK(c.upper <= 1.0);
    prev = c.point;
  }
}

TEST_CASE("binormal outputs invariant under common affine maps") {
  TwoGroupSample s = norm_sample(25, 35, 5.5, 4.0, 202);
  TwoGroupSample mapped = s;
  for (auto& v : mapped.reference) v = 3.25 * v - 11.0;
  for (auto& v : mapped.comparator) v = 3.25 * v - 11.0;

  BinormFit f1 = fit_binormal(s);
  BinormFit f2 = fit_binormal(mapped);
  CHECK(f1.beta0 == doctest::Approx(f2.beta0).epsilon(1e-10));
  CHECK(f1.beta1 == doctest::Approx(f2.beta1).epsilon(1e-10));
  for (double p : {0.1, 0.5, 0.9}) {
    CurveInterval a = binorm_curve_ci(f1, p, 0.95);
    CurveInterval b = binorm_curve_ci(f2, p, 0.95);
    CHECK(a.point == doctest::Approx(b.point).epsilon(1e-10));
    CHECK(a.lower == doctest::Approx(b.lower).epsilon(1e-10));
    CHECK(a.upper == doctest::Approx(b.upper).epsilon(1e-10));
  }
}

TEST_CASE("binorm_auc: quadrature matches the closed form") {
  BinormFit fit;
  fit.beta0 = 0.0;
  fit.beta1 = 1.0;
  CHECK(binorm_auc(fit) == doctest::Approx(0.5).epsilon(1e-9));

  fit.beta0 = 1.5;
  CHECK(binorm_auc(fit) == doctest::Approx(0.8556).epsilon(1e-4 / 0.8556));
  CHECK(binorm_auc(fit) ==
        doctest::Approx(normal_cdf(1.5 / std::sqrt(2.0))).epsilon(1e-6));

  fit.beta0 = 1.70;
  fit.beta1 = 0.52;
  CHECK(binorm_auc(fit) == doctest::Approx(0.934).epsilon(1e-3 / 0.934));
  CHECK(binorm_auc(fit) ==
        doctest::Approx(normal_cdf(1.70 / std::sqrt(1.0 + 0.52 * 0.52)))
            .epsilon(1e-6));
}

TEST_CASE("welch_t_test: null, antisymmetry, power") {
  TwoGroupSample eq = make_sample({1, 2, 3}, {1, 2, 3});
  TestResult t = welch_t_test(eq);
  CHECK(t.statistic == doctest::Approx(0.0));
  CHECK(t.p_value == doctest::Approx(1.0));
  CHECK(t.null_kind == NullKind::Weak);

  TwoGroupSample s = norm_sample(20, 25, 5.5, 4.0, 303);
  TwoGroupSample swapped;
  swapped.reference = s.comparator;
  swapped.comparator = s.reference;
  swapped.orientation = s.orientation;
  CHECK(welch_t_test(s).statistic ==
        doctest::Approx(-welch_t_test(swapped).statistic).epsilon(1e-12));

  int rejects = 0;
  const int m = 500;
  for (int rep = 0; rep < m; ++rep) {
    TwoGroupSample d = norm_sample(30, 30, 5.5, 4.0, 404, rep + 1);
    if (welch_t_test(d).p_value < 0.05) ++rejects;
  }
  CHECK(rejects > static_cast<int>(0.99 * m));
}

TEST_CASE("normal_lrt: null behavior, positivity, Monte-Carlo size") {
  TwoGroupSample eq = make_sample({1, 2, 3}, {1, 2, 3});
  TestResult t = normal_lrt(eq);
  CHECK(t.statistic == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.p_value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(t.null_kind == NullKind::Strong);

  // different variances, equal means: strictly positive statistic
  TwoGroupSample hetero = make_sample({-3, 0, 3}, {-1, 0, 1});
  CHECK(normal_lrt(hetero).statistic > 0.0);

  // size under the strong null at n = 60 + 60 (asymptotic chi-square(2))
  int rejects = 0;
  const int m = 1000;
  for (int rep = 0; rep < m; ++rep) {
    TwoGroupSample d = norm_sample(60, 60, 0.0, 0.0, 505, rep + 1);
    if (normal_lrt(d).p_value < 0.05) ++rejects;
  }
  double rate = static_cast<double>(rejects) / m;
  CHECK(rate >= 0.03);
  CHECK(rate <= 0.08);
}

TEST_CASE("parametric biexponential CI coverage under the correct model") {
  // exponential DGM with alpha = 4, n0 = n1 = 60: 95% pointwise coverage
  // within +-3% at p in {0.1, 0.3, 0.5}
  const int m = 1000;
  const double p_grid[3] = {0.1, 0.3, 0.5};
  int covered[3] = {0, 0, 0};
  for (int rep = 0; rep < m; ++rep) {
    TwoGroupSample s = exp_sample(60, 60, 1.0, 4.0, 606, rep + 1);
    BiexpFit fit = fit_biexponential(s);
    for (int k = 0; k < 3; ++k) {
      double truth = 1.0 - std::pow(1.0 - p_grid[k], 4.0);
      CurveInterval ci = biexp_curve_ci(fit, p_grid[k], 0.95);
      if (ci.lower <= truth && truth <= ci.upper) ++covered[k];
    }
  }
  for (int k = 0; k < 3; ++k) {
    double cp = static_cast<double>(covered[k]) / m;
    CHECK(cp >= 0.92);
    CHECK(cp <= 0.98);
  }
}

TEST_CASE("curve-on-grid materializers satisfy the curve invariants") {
  TwoGroupSample s = exp_sample(40, 40, 1.0, 4.0, 707);
  BiexpFit bf = fit_biexponential(s);
  RocCurveEstimate bc = biexp_curve_on_grid(bf, default_fpr_grid(99), 0.95);
  check_curve_invariants(bc);
  CHECK(bc.method == CurveMethod::ParamBiexp);

  TwoGroupSample ns = norm_sample(40, 40, 5.5, 4.0, 808);
  BinormFit nf = fit_binormal(ns);
  RocCurveEstimate nc = binorm_curve_on_grid(nf, default_fpr_grid(99), 0.95);
  check_curve_invariants(nc);
  CHECK(nc.method == CurveMethod::ParamBinorm);
}
