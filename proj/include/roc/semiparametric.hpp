// Direct (semiparametric) ROC-curve modeling from pairwise order indicators
// and placement values: a log-link binomial model through the origin for the
// biexponential family and a probit-link model for the binormal family, both
// solved as estimating equations, with bootstrap inference.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "roc/bootstrap.hpp"
#include "roc/curve.hpp"
#include "roc/empirical.hpp"
#include "roc/sample.hpp"

namespace roc {

enum class SemiFamily { Biexponential, Binormal };

// Per-row summary of the n0 x n1 pairwise layout. The placement value
// p_i = F0(y0_i) and the indicator row sum S_i = #{ j : y1_j <= y0_i } are
// constant across j within a row, so rows are stored once and expanded
// logically; indicator(i, j) reproduces the matrix entries on demand.
// Rows with placement 1 (the reference maximum and its ties) are masked out.
struct PairwiseDesign {
  std::vector<double> reference;   // y0, original order
  std::vector<double> comparator;  // y1, original order
  std::vector<double> placement;   // p_i, in {1/n0, ..., 1}
  std::vector<std::size_t> u_row_sum;
  std::vector<bool> included;
  std::size_t usable_rows = 0;

  std::size_t n0() const noexcept { return placement.size(); }
  std::size_t n1() const noexcept { return comparator.size(); }
  std::size_t usable_pairs() const noexcept { return usable_rows * n1(); }

  // U_ij = I(y1_j <= y0_i).
  bool indicator(std::size_t i, std::size_t j) const {
    return comparator[j] <= reference[i];
  }
};

struct SemiFit {
  SemiFamily family = SemiFamily::Biexponential;
  double alpha = 1.0;        // biexponential
  double beta0 = 0.0;        // binormal
  double beta1 = 1.0;
  bool converged = false;
  int iterations = 0;
  double final_gradient_norm = 0.0;
  std::size_t usable_pairs = 0;
  std::vector<std::string> warnings;
};

// Builds placement values, indicator row sums and the inclusion mask.
// Throws insufficient_data_error when fewer than 3 usable rows remain.
PairwiseDesign build_pairwise_design(const TwoGroupSample& sample);

// Score of the biexponential estimating equation at alpha (sum over usable
// pairs); exposed for diagnostics and tests.
double semi_biexp_score(const PairwiseDesign& design, double alpha);

// Score of the binormal estimating equations at (beta0, beta1).
void semi_binorm_score(const PairwiseDesign& design, double beta0, double beta1,
                       double out_score[2]);

// Solves the biexponential estimating equation by damped Newton/scoring with
// a bisection fallback inside the bracket (1e-6, 1e6). `init` is the warm
// start (1.0 by default).
SemiFit fit_semi_biexponential(const PairwiseDesign& design, double init = 1.0);

// Solves the probit estimating equations by iteratively reweighted least
// squares with step halving; fitted means are clipped to [1e-10, 1-1e-10].
// A fit with beta1 <= 0 is returned with a warning attached.
SemiFit fit_semi_binormal(const PairwiseDesign& design, double init_beta0 = 0.0,
                          double init_beta1 = 1.0);

// Fitted curve value at p.
double semi_curve(const SemiFit& fit, double p);

struct SemiInference {
  SemiFit fit;
  RocCurveEstimate curve;  // percentile bootstrap band on config.fpr_grid
  TestResult weak;
  TestResult strong;
};

// Bootstrap band plus Wald tests with bootstrap standard errors: weak null
// log(alpha) = 0 (biexponential) or beta0 = 0 (binormal); strong null
// alpha = 1 (same statistic) or (beta0, beta1) = (0, 1) via a 2-df Wald test
// with the bootstrap covariance. Replicate refits warm-start at the original
// fit.
SemiInference semi_inference(const TwoGroupSample& sample, SemiFamily family,
                             const BandConfig& config);

}  // namespace roc
