#include "roc/semiparametric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "roc/errors.hpp"
#include "roc/special_functions.hpp"

namespace roc {

namespace {

constexpr double kAlphaBracketLo = 1e-6;
constexpr double kAlphaBracketHi = 1e6;
constexpr double kMeanClip = 1e-10;
constexpr int kMaxIterations = 200;

double score_tolerance(const PairwiseDesign& design) {
  return 1e-10 * std::max<double>(1.0, static_cast<double>(design.usable_pairs()));
}

}  // namespace

PairwiseDesign build_pairwise_design(const TwoGroupSample& sample) {
  PairwiseDesign design;
  design.reference = sample.reference;
  design.comparator = sample.comparator;

  std::vector<double> sorted0 = sample.reference;
  std::vector<double> sorted1 = sample.comparator;
  std::sort(sorted0.begin(), sorted0.end());
  std::sort(sorted1.begin(), sorted1.end());

  std::size_t n0 = sorted0.size();
  design.placement.resize(n0);
  design.u_row_sum.resize(n0);
  design.included.resize(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    double y0 = sample.reference[i];
    auto ub0 = std::upper_bound(sorted0.begin(), sorted0.end(), y0);
    design.placement[i] =
        static_cast<double>(ub0 - sorted0.begin()) / static_cast<double>(n0);
    auto ub1 = std::upper_bound(sorted1.begin(), sorted1.end(), y0);
    design.u_row_sum[i] = static_cast<std::size_t>(ub1 - sorted1.begin());
    design.included[i] = design.placement[i] < 1.0;
    if (design.included[i]) ++design.usable_rows;
  }
  if (design.usable_rows < 3)
    throw insufficient_data_error(
        "pairwise design: fewer than 3 usable reference rows after masking the maximum");
  return design;
}

double semi_biexp_score(const PairwiseDesign& design, double alpha) {
  double n1 = static_cast<double>(design.n1());
  double score = 0.0;
  for (std::size_t i = 0; i < design.n0(); ++i) {
    if (!design.included[i]) continue;
    double q = std::log1p(-design.placement[i]);  // log(1 - p_i) < 0
    double mu = std::exp(alpha * q);              // (1 - p_i)^alpha
    double denom = 1.0 - mu;
    if (denom < 1e-12) denom = 1e-12;  // removable singularity as alpha -> 0
    double v_sum = n1 - static_cast<double>(design.u_row_sum[i]);
    score += q / denom * (v_sum - n1 * mu);
  }
  return score;
}

namespace {

// Expected information of the biexponential estimating equation.
double semi_biexp_info(const PairwiseDesign& design, double alpha) {
  double n1 = static_cast<double>(design.n1());
  double info = 0.0;
  for (std::size_t i = 0; i < design.n0(); ++i) {
    if (!design.included[i]) continue;
    double q = std::log1p(-design.placement[i]);
    double mu = std::exp(alpha * q);
    double denom = 1.0 - mu;
    if (denom < 1e-12) denom = 1e-12;
    info += n1 * q * q * mu / denom;
  }
  return info;
}

}  // namespace

SemiFit fit_semi_biexponential(const PairwiseDesign& design, double init) {
  SemiFit fit;
  fit.family = SemiFamily::Biexponential;
  fit.usable_pairs = design.usable_pairs();

  std::size_t total_u = 0;
  for (std::size_t i = 0; i < design.n0(); ++i)
    if (design.included[i]) total_u += design.u_row_sum[i];
  if (total_u == design.usable_pairs())
    throw separation_error(
        "semiparametric biexponential: all V = 0 (complete separation)");

  double score_lo = semi_biexp_score(design, kAlphaBracketLo);
  double score_hi = semi_biexp_score(design, kAlphaBracketHi);
  if ((score_lo > 0.0) == (score_hi > 0.0))
    throw separation_error(
        "semiparametric biexponential: score has no sign change on (1e-6, 1e6)");

  // The log-likelihood is concave in alpha, so the score is decreasing and
  // the bracket [lo, hi] always contains the unique root.
  double lo = kAlphaBracketLo, hi = kAlphaBracketHi;
  double alpha = std::clamp(init, 2.0 * lo, 0.5 * hi);
  double tol = score_tolerance(design);
  double score = semi_biexp_score(design, alpha);
  int iter = 0;
  for (; iter < kMaxIterations && std::fabs(score) > tol; ++iter) {
    if (score > 0.0)
      lo = std::max(lo, alpha);
    else
      hi = std::min(hi, alpha);
    double info = semi_biexp_info(design, alpha);
    double candidate = alpha + score / info;
    if (!(candidate > lo && candidate < hi)) candidate = 0.5 * (lo + hi);
    double candidate_score = semi_biexp_score(design, candidate);
    // Step halving toward the current iterate if the score norm worsens.
    int halvings = 0;
    while (std::fabs(candidate_score) > std::fabs(score) && halvings < 30) {
      candidate = 0.5 * (candidate + alpha);
      candidate_score = semi_biexp_score(design, candidate);
      ++halvings;
    }
    if (candidate == alpha) break;  // no representable progress
    alpha = candidate;
    score = candidate_score;
  }

  fit.alpha = alpha;
  fit.iterations = iter;
  fit.final_gradient_norm = std::fabs(score);
  fit.converged = fit.final_gradient_norm <= tol;
  if (!fit.converged)
    throw convergence_error("semiparametric biexponential fit did not converge",
                            iter, fit.final_gradient_norm);
  return fit;
}

void semi_binorm_score(const PairwiseDesign& design, double beta0, double beta1,
                       double out_score[2]) {
  double n1 = static_cast<double>(design.n1());
  out_score[0] = out_score[1] = 0.0;
  for (std::size_t i = 0; i < design.n0(); ++i) {
    if (!design.included[i]) continue;
    double x = normal_quantile(design.placement[i]);
    double z = beta0 + beta1 * x;
    double mu = std::clamp(normal_cdf(z), kMeanClip, 1.0 - kMeanClip);
    double w = normal_pdf(z) / (mu * (1.0 - mu));
    double resid = static_cast<double>(design.u_row_sum[i]) - n1 * mu;
    out_score[0] += w * resid;
    out_score[1] += w * resid * x;
  }
}

SemiFit fit_semi_binormal(const PairwiseDesign& design, double init_beta0,
                          double init_beta1) {
  SemiFit fit;
  fit.family = SemiFamily::Binormal;
  fit.usable_pairs = design.usable_pairs();

  std::size_t total_u = 0;
  for (std::size_t i = 0; i < design.n0(); ++i)
    if (design.included[i]) total_u += design.u_row_sum[i];
  if (total_u == 0 || total_u == design.usable_pairs())
    throw separation_error(
        "semiparametric binormal: all indicators on one side (complete separation)");

  double n1 = static_cast<double>(design.n1());
  double b0 = init_beta0, b1 = init_beta1;
  double tol = score_tolerance(design);

  auto score_norm = [&](double s[2]) { return std::hypot(s[0], s[1]); };

  double score[2];
  semi_binorm_score(design, b0, b1, score);
  int iter = 0;
  for (; iter < kMaxIterations && score_norm(score) > tol; ++iter) {
    // Fisher information of the probit estimating equations.
    double i00 = 0.0, i01 = 0.0, i11 = 0.0;
    for (std::size_t i = 0; i < design.n0(); ++i) {
      if (!design.included[i]) continue;
      double x = normal_quantile(design.placement[i]);
      double z = b0 + b1 * x;
      double mu = std::clamp(normal_cdf(z), kMeanClip, 1.0 - kMeanClip);
      double phi = normal_pdf(z);
      double w = n1 * phi * phi / (mu * (1.0 - mu));
      i00 += w;
      i01 += w * x;
      i11 += w * x * x;
    }
    double det = i00 * i11 - i01 * i01;
    if (!(det > 0.0) || !std::isfinite(det))
      throw convergence_error("semiparametric binormal: singular information matrix",
                              iter, score_norm(score));
    double d0 = (i11 * score[0] - i01 * score[1]) / det;
    double d1 = (-i01 * score[0] + i00 * score[1]) / det;

    double step = 1.0;
    double cand0 = b0, cand1 = b1, cand_score[2];
    double current_norm = score_norm(score);
    int halvings = 0;
    for (;;) {
      cand0 = b0 + step * d0;
      cand1 = b1 + step * d1;
      semi_binorm_score(design, cand0, cand1, cand_score);
      if (score_norm(cand_score) <= current_norm || halvings >= 30) break;
      step *= 0.5;
      ++halvings;
    }
    if (cand0 == b0 && cand1 == b1) break;
    b0 = cand0;
    b1 = cand1;
    score[0] = cand_score[0];
    score[1] = cand_score[1];
  }

  fit.beta0 = b0;
  fit.beta1 = b1;
  fit.iterations = iter;
  fit.final_gradient_norm = score_norm(score);
  fit.converged = fit.final_gradient_norm <= tol;
  if (!fit.converged)
    throw convergence_error("semiparametric binormal fit did not converge", iter,
                            fit.final_gradient_norm);
  if (b1 <= 0.0)
    fit.warnings.push_back("fitted beta1 <= 0 violates the orientation convention");
  return fit;
}

double semi_curve(const SemiFit& fit, double p) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  if (fit.family == SemiFamily::Biexponential)
    return 1.0 - std::pow(1.0 - p, fit.alpha);
  return normal_cdf(fit.beta0 + fit.beta1 * normal_quantile(p));
}

namespace {

std::vector<double> fit_params_and_curve(const TwoGroupSample& sample,
                                         SemiFamily family,
                                         std::span<const double> grid,
                                         double init_alpha, double init_beta0,
                                         double init_beta1) {
  PairwiseDesign design = build_pairwise_design(sample);
  SemiFit fit = (family == SemiFamily::Biexponential)
                    ? fit_semi_biexponential(design, init_alpha)
                    : fit_semi_binormal(design, init_beta0, init_beta1);
  std::vector<double> out;
  out.reserve(grid.size() + 2);
  for (double p : grid) out.push_back(semi_curve(fit, p));
  if (family == SemiFamily::Biexponential) {
    out.push_back(std::log(fit.alpha));
  } else {
    out.push_back(fit.beta0);
    out.push_back(fit.beta1);
  }
  return out;
}

}  // namespace

SemiInference semi_inference(const TwoGroupSample& sample, SemiFamily family,
                             const BandConfig& config) {
  SemiInference result;

  PairwiseDesign design = build_pairwise_design(sample);
  result.fit = (family == SemiFamily::Biexponential)
                   ? fit_semi_biexponential(design)
                   : fit_semi_binormal(design);
  const SemiFit& fit = result.fit;

  BootstrapRun run = run_bootstrap(
      sample, config, [&](const TwoGroupSample& s) {
        return fit_params_and_curve(s, family, config.fpr_grid, fit.alpha,
                                    fit.beta0, fit.beta1);
      });

  std::size_t g = config.fpr_grid.size();
  CurveMethod method = (family == SemiFamily::Biexponential)
                           ? CurveMethod::SemiBiexp
                           : CurveMethod::SemiBinorm;
  result.curve = percentile_band_curve(run, config.fpr_grid, config.level, method);

  // Wald tests with bootstrap standard errors.
  std::size_t nb = run.replicates.size();
  if (nb < 2)
    throw convergence_error("semi_inference: too few successful replicates",
                            static_cast<int>(nb), 0.0);
  if (family == SemiFamily::Biexponential) {
    double mean = 0.0;
    for (const auto& rep : run.replicates) mean += rep[g];
    mean /= static_cast<double>(nb);
    double ss = 0.0;
    for (const auto& rep : run.replicates) ss += (rep[g] - mean) * (rep[g] - mean);
    double se = std::sqrt(ss / static_cast<double>(nb - 1));
    double z = std::log(fit.alpha) / se;
    TestResult weak;
    weak.statistic = z;
    weak.p_value = std::min(1.0, 2.0 * normal_cdf(-std::fabs(z)));
    weak.null_kind = NullKind::Weak;
    weak.reference_distribution = "standard normal; Wald on log(alpha), bootstrap SE";
    result.weak = weak;
    result.strong = weak;
    result.strong.null_kind = NullKind::Strong;
    result.strong.reference_distribution =
        "standard normal; Wald on log(alpha), bootstrap SE (weak and strong "
        "nulls coincide for this family)";
  } else {
    double m0 = 0.0, m1 = 0.0;
    for (const auto& rep : run.replicates) {
      m0 += rep[g];
      m1 += rep[g + 1];
    }
    m0 /= static_cast<double>(nb);
    m1 /= static_cast<double>(nb);
    double c00 = 0.0, c01 = 0.0, c11 = 0.0;
    for (const auto& rep : run.replicates) {
      double d0 = rep[g] - m0;
      double d1 = rep[g + 1] - m1;
      c00 += d0 * d0;
      c01 += d0 * d1;
      c11 += d1 * d1;
    }
    c00 /= static_cast<double>(nb - 1);
    c01 /= static_cast<double>(nb - 1);
    c11 /= static_cast<double>(nb - 1);

    TestResult weak;
    double se0 = std::sqrt(c00);
    double zw = fit.beta0 / se0;
    weak.statistic = zw;
    weak.p_value = std::min(1.0, 2.0 * normal_cdf(-std::fabs(zw)));
    weak.null_kind = NullKind::Weak;
    weak.reference_distribution = "standard normal; Wald on beta0, bootstrap SE";
    result.weak = weak;

    double det = c00 * c11 - c01 * c01;
    if (!(det > 0.0))
      throw convergence_error("semi_inference: degenerate bootstrap covariance",
                              static_cast<int>(nb), det);
    double d0 = fit.beta0;
    double d1 = fit.beta1 - 1.0;
    double w = (d0 * (c11 * d0 - c01 * d1) + d1 * (-c01 * d0 + c00 * d1)) / det;
    TestResult strong;
    strong.statistic = w;
    strong.p_value = chi2_sf(std::max(0.0, w), 2);
    strong.null_kind = NullKind::Strong;
    strong.reference_distribution =
        "chi-square(2); Wald on (beta0, beta1) = (0, 1), bootstrap covariance";
    result.strong = strong;
  }

  return result;
}

}  // namespace roc
