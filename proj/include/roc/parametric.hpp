// Parametric maximum-likelihood ROC fits for the biexponential and binormal
// families, with closed-form pointwise confidence intervals, AUC summaries,
// and the associated likelihood-ratio / t tests.

#pragma once

#include <cstddef>

#include "roc/curve.hpp"
#include "roc/empirical.hpp"
#include "roc/sample.hpp"

namespace roc {

// Exponential-model fit: ROC(p) = 1 - (1-p)^alpha with alpha = lambda1/lambda0.
struct BiexpFit {
  double alpha = 1.0;
  double lambda0_hat = 1.0;
  double lambda1_hat = 1.0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;

  double roc(double p) const;
};

// Normal-model fit: ROC(p) = Phi(beta0 + beta1 * Phi^-1(p)).
struct BinormFit {
  double beta0 = 0.0;
  double beta1 = 1.0;
  double mu0_hat = 0.0;
  double mu1_hat = 0.0;
  double s0 = 1.0;  // sample SDs (n-1 divisor)
  double s1 = 1.0;
  double welch_df = 1.0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;

  double roc(double p) const;
};

struct CurveInterval {
  double lower = 0.0;
  double point = 0.0;
  double upper = 1.0;
};

// Rate MLEs lambda_g = 1/mean_g; requires strictly positive support.
BiexpFit fit_biexponential(const TwoGroupSample& sample);

// Pointwise CI from the variance-stabilized log rate ratio:
// 1 - (1-p)^(alpha * exp(+-z * sqrt(1/n0 + 1/n1))).
CurveInterval biexp_curve_ci(const BiexpFit& fit, double p, double level);

// Closed form AUC = 1 - 1/(alpha + 1).
double biexp_auc(const BiexpFit& fit);

// Deviance 2*(n0*log(l0) + n1*log(l1) - n*log(l)) against chi-square(1);
// under the exponential model the weak and strong nulls coincide (alpha = 1).
TestResult exponential_lrt(const TwoGroupSample& sample);

// Group means, sample SDs, (beta0, beta1), Welch-Satterthwaite df.
BinormFit fit_binormal(const TwoGroupSample& sample);

// Pointwise CI: Phi(((mu0-mu1) + s0*Phi^-1(p) +- t_{df} * sqrt(s0^2/n0 + s1^2/n1)) / s1).
CurveInterval binorm_curve_ci(const BinormFit& fit, double p, double level);

// AUC by adaptive quadrature of the fitted curve over (0, 1).
double binorm_auc(const BinormFit& fit);

// Unequal-variance t test of equal means (weak null).
TestResult welch_t_test(const TwoGroupSample& sample);

// Likelihood ratio test of the strong null (equal means and variances),
// using MLE variances (divisor n), against chi-square(2).
TestResult normal_lrt(const TwoGroupSample& sample);

// Materializes a fitted curve (with pointwise CI band) on a grid, endpoints
// (0,0)/(1,1) appended.
RocCurveEstimate biexp_curve_on_grid(const BiexpFit& fit,
                                     const std::vector<double>& fpr_grid,
                                     double level);
RocCurveEstimate binorm_curve_on_grid(const BinormFit& fit,
                                      const std::vector<double>& fpr_grid,
                                      double level);

}  // namespace roc
