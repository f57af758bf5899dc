#include "roc/analysis.hpp"

#include <cmath>

#include "roc/bootstrap.hpp"
#include "roc/parametric.hpp"
#include "roc/quadrature.hpp"
#include "roc/semiparametric.hpp"

namespace roc {

namespace {

RocCurveEstimate curve_without_band(const std::vector<double>& grid,
                                    const std::function<double(double)>& eval,
                                    CurveMethod method, double level) {
  RocCurveEstimate curve;
  curve.method = method;
  curve.level = level;
  curve.points.push_back(RocPoint{0.0, 0.0, std::nullopt});
  for (double p : grid) curve.points.push_back(RocPoint{p, eval(p), std::nullopt});
  curve.points.push_back(RocPoint{1.0, 1.0, std::nullopt});
  return curve;
}

}  // namespace

FitReport run_fit(const TwoGroupSample& sample, const FitOptions& options) {
  FitReport report;
  report.method = options.method;
  report.n0 = sample.n0();
  report.n1 = sample.n1();

  std::vector<double> grid = default_fpr_grid(options.grid_interior);

  BandConfig band_config;
  band_config.replicates = options.bootstrap_replicates;
  band_config.level = options.level;
  band_config.fpr_grid = grid;
  band_config.seed = options.seed;
  band_config.workers = options.workers;
  band_config.unconditional = options.unconditional_bootstrap;

  switch (options.method) {
    case CurveMethod::Empirical: {
      report.auc = empirical_auc(sample);
      if (options.bootstrap_replicates > 0) {
        report.curve = bootstrap_band(
            sample,
            [](const TwoGroupSample& s, std::span<const double> g) {
              return empirical_roc_at(s, g);
            },
            band_config, CurveMethod::Empirical);
      } else {
        report.curve = curve_without_band(
            grid,
            [&](double p) {
              return empirical_roc_at(sample, std::span<const double>(&p, 1))[0];
            },
            CurveMethod::Empirical, options.level);
        report.warnings.push_back("bootstrap disabled; no confidence band");
      }
      report.weak = mann_whitney_test(sample);
      report.strong = ks_test(sample);
      break;
    }
    case CurveMethod::ParamBiexp: {
      BiexpFit fit = fit_biexponential(sample);
      report.alpha = fit.alpha;
      report.auc = biexp_auc(fit);
      report.curve = biexp_curve_on_grid(fit, grid, options.level);
      TestResult lrt = exponential_lrt(sample);
      report.strong = lrt;
      lrt.null_kind = NullKind::Weak;
      report.weak = lrt;
      break;
    }
    case CurveMethod::ParamBinorm: {
      BinormFit fit = fit_binormal(sample);
      report.beta0 = fit.beta0;
      report.beta1 = fit.beta1;
      report.auc = binorm_auc(fit);
      report.curve = binorm_curve_on_grid(fit, grid, options.level);
      report.weak = welch_t_test(sample);
      report.strong = normal_lrt(sample);
      break;
    }
    case CurveMethod::SemiBiexp:
    case CurveMethod::SemiBinorm: {
      SemiFamily family = (options.method == CurveMethod::SemiBiexp)
                              ? SemiFamily::Biexponential
                              : SemiFamily::Binormal;
      if (options.bootstrap_replicates > 0) {
        SemiInference inference = semi_inference(sample, family, band_config);
        if (family == SemiFamily::Biexponential) {
          report.alpha = inference.fit.alpha;
          report.auc = 1.0 - 1.0 / (inference.fit.alpha + 1.0);
        } else {
          report.beta0 = inference.fit.beta0;
          report.beta1 = inference.fit.beta1;
          report.auc = integrate_unit_interval(
              [&](double p) { return semi_curve(inference.fit, p); });
        }
        report.curve = inference.curve;
        report.weak = inference.weak;
        report.strong = inference.strong;
        for (const auto& w : inference.fit.warnings) report.warnings.push_back(w);
      } else {
        PairwiseDesign design = build_pairwise_design(sample);
        SemiFit fit = (family == SemiFamily::Biexponential)
                          ? fit_semi_biexponential(design)
                          : fit_semi_binormal(design);
        if (family == SemiFamily::Biexponential) {
          report.alpha = fit.alpha;
          report.auc = 1.0 - 1.0 / (fit.alpha + 1.0);
        } else {
          report.beta0 = fit.beta0;
          report.beta1 = fit.beta1;
          report.auc =
              integrate_unit_interval([&](double p) { return semi_curve(fit, p); });
        }
        report.curve = curve_without_band(
            grid, [&](double p) { return semi_curve(fit, p); },
            options.method, options.level);
        report.warnings.push_back(
            "bootstrap disabled; no confidence band or tests");
        for (const auto& w : fit.warnings) report.warnings.push_back(w);
      }
      break;
    }
  }

  for (const auto& w : report.curve.warnings) report.warnings.push_back(w);
  return report;
}

}  // namespace roc
