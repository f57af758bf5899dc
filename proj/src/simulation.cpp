#include "roc/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "roc/bootstrap.hpp"
#include "roc/empirical.hpp"
#include "roc/errors.hpp"
#include "roc/parallel.hpp"
#include "roc/parametric.hpp"
#include "roc/semiparametric.hpp"
#include "roc/special_functions.hpp"

namespace roc {

Dgm Dgm::exp_exp(double lambda0, double lambda1) {
  if (!(lambda0 > 0.0 && lambda1 > 0.0))
    throw validation_error("exponential DGM: rates must be positive");
  return Dgm{Kind::ExpExp, lambda0, lambda1, 0.0, 1.0};
}

Dgm Dgm::norm_norm(double mu0, double sigma0, double mu1, double sigma1) {
  if (!(sigma0 > 0.0 && sigma1 > 0.0))
    throw validation_error("normal DGM: standard deviations must be positive");
  return Dgm{Kind::NormNorm, mu0, sigma0, mu1, sigma1};
}

Dgm Dgm::norm_ref_biexp(double mu0, double sigma0, double alpha) {
  if (!(sigma0 > 0.0) || !(alpha > 0.0))
    throw validation_error("crossed DGM: sigma0 and alpha must be positive");
  return Dgm{Kind::NormRefBiexp, mu0, sigma0, alpha, 1.0};
}

Dgm Dgm::exp_ref_binorm(double lambda0, double beta0, double beta1) {
  if (!(lambda0 > 0.0) || !(beta1 > 0.0))
    throw validation_error("crossed DGM: lambda0 and beta1 must be positive");
  return Dgm{Kind::ExpRefBinorm, lambda0, beta0, beta1, 1.0};
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::string Dgm::label() const {
  switch (kind) {
    case Kind::ExpExp:
      return "exp(lambda0=" + fmt(a) + ",lambda1=" + fmt(b) + ")";
    case Kind::NormNorm:
      return "norm(mu0=" + fmt(a) + ",sd0=" + fmt(b) + ",mu1=" + fmt(c) +
             ",sd1=" + fmt(d) + ")";
    case Kind::NormRefBiexp:
      return "norm-ref-biexp(mu0=" + fmt(a) + ",sd0=" + fmt(b) + ",alpha=" + fmt(c) + ")";
    case Kind::ExpRefBinorm:
      return "exp-ref-binorm(lambda0=" + fmt(a) + ",beta0=" + fmt(b) +
             ",beta1=" + fmt(c) + ")";
  }
  return "unknown";
}

TwoGroupSample sample_dgm(const Dgm& dgm, std::size_t n0, std::size_t n1,
                          RngStream& rng) {
  TwoGroupSample sample;
  sample.orientation = Orientation::LowerLessDesirable;
  sample.reference.reserve(n0);
  sample.comparator.reserve(n1);
  switch (dgm.kind) {
    case Dgm::Kind::ExpExp:
      for (std::size_t i = 0; i < n0; ++i)
        sample.reference.push_back(rng.next_exponential(dgm.a));
      for (std::size_t j = 0; j < n1; ++j)
        sample.comparator.push_back(rng.next_exponential(dgm.b));
      break;
    case Dgm::Kind::NormNorm:
      for (std::size_t i = 0; i < n0; ++i)
        sample.reference.push_back(dgm.a + dgm.b * rng.next_normal());
      for (std::size_t j = 0; j < n1; ++j)
        sample.comparator.push_back(dgm.c + dgm.d * rng.next_normal());
      break;
    case Dgm::Kind::NormRefBiexp:
      // F1(t) = 1 - (1 - Phi((t - mu0)/sigma0))^alpha
      for (std::size_t i = 0; i < n0; ++i)
        sample.reference.push_back(dgm.a + dgm.b * rng.next_normal());
      for (std::size_t j = 0; j < n1; ++j) {
        double u = rng.next_unit();
        double inner = 1.0 - std::pow(1.0 - u, 1.0 / dgm.c);
        inner = std::clamp(inner, 1e-300, 1.0 - 1e-16);
        sample.comparator.push_back(dgm.a + dgm.b * normal_quantile(inner));
      }
      break;
    case Dgm::Kind::ExpRefBinorm:
      // F1(t) = Phi(beta0 + beta1 * Phi^-1(1 - exp(-lambda0 t)))
      for (std::size_t i = 0; i < n0; ++i)
        sample.reference.push_back(rng.next_exponential(dgm.a));
      for (std::size_t j = 0; j < n1; ++j) {
        double u = rng.next_unit();
        double inner = normal_cdf((normal_quantile(u) - dgm.b) / dgm.c);
        inner = std::clamp(inner, 1e-300, 1.0 - 1e-16);
        sample.comparator.push_back(-std::log1p(-inner) / dgm.a);
      }
      break;
  }
  return sample;
}

double true_roc(const Dgm& dgm, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("true_roc: p must lie in (0, 1)");
  switch (dgm.kind) {
    case Dgm::Kind::ExpExp:
      return 1.0 - std::pow(1.0 - p, dgm.b / dgm.a);
    case Dgm::Kind::NormNorm:
      return normal_cdf((dgm.a - dgm.c) / dgm.d + dgm.b / dgm.d * normal_quantile(p));
    case Dgm::Kind::NormRefBiexp:
      return 1.0 - std::pow(1.0 - p, dgm.c);
    case Dgm::Kind::ExpRefBinorm:
      return normal_cdf(dgm.b + dgm.c * normal_quantile(p));
  }
  throw std::logic_error("true_roc: unknown DGM kind");
}

std::string sim_method_name(SimMethod m) {
  switch (m) {
    case SimMethod::EmpiricalBootstrap: return "empirical";
    case SimMethod::WilsonEmpirical: return "wilson";
    case SimMethod::ParamBiexp: return "param-biexp";
    case SimMethod::ParamBinorm: return "param-binorm";
    case SimMethod::SemiBiexp: return "semi-biexp";
    case SimMethod::SemiBinorm: return "semi-binorm";
  }
  return "unknown";
}

namespace {

struct MethodCell {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// One replicate's (estimate, interval) per grid point, or nullopt on failure.
using MethodOutcome = std::vector<MethodCell>;

MethodOutcome eval_method(SimMethod method, const TwoGroupSample& sample,
                          const std::vector<double>& grid,
                          const ScenarioConfig& config, std::uint64_t boot_seed) {
  MethodOutcome out(grid.size());
  switch (method) {
    case SimMethod::EmpiricalBootstrap: {
      BandConfig bc;
      bc.replicates = config.bootstrap_replicates;
      bc.level = config.level;
      bc.fpr_grid = grid;
      bc.seed = boot_seed;
      bc.workers = 1;  // replicates already run in parallel
      RocCurveEstimate band = bootstrap_band(
          sample,
          [](const TwoGroupSample& s, std::span<const double> g) {
            return empirical_roc_at(s, g);
          },
          bc, CurveMethod::Empirical);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out[k] = MethodCell{band.points[k + 1].tpr, band.band[k + 1].lower,
                            band.band[k + 1].upper};
      }
      return out;
    }
    case SimMethod::WilsonEmpirical: {
      EmpiricalDistribution f0(sample.reference);
      EmpiricalDistribution f1(sample.comparator);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        double threshold = f0.quantile(grid[k]);
        double tpr = f1.cdf(threshold);
        auto successes = static_cast<std::size_t>(
            std::llround(tpr * static_cast<double>(sample.n1())));
        auto [lo, hi] = wilson_interval(successes, sample.n1(), config.level);
        out[k] = MethodCell{tpr, lo, hi};
      }
      return out;
    }
    case SimMethod::ParamBiexp: {
      BiexpFit fit = fit_biexponential(sample);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        CurveInterval ci = biexp_curve_ci(fit, grid[k], config.level);
        out[k] = MethodCell{ci.point, ci.lower, ci.upper};
      }
      return out;
    }
    case SimMethod::ParamBinorm: {
      BinormFit fit = fit_binormal(sample);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        CurveInterval ci = binorm_curve_ci(fit, grid[k], config.level);
        out[k] = MethodCell{ci.point, ci.lower, ci.upper};
      }
      return out;
    }
    case SimMethod::SemiBiexp:
    case SimMethod::SemiBinorm: {
      SemiFamily family = (method == SimMethod::SemiBiexp)
                              ? SemiFamily::Biexponential
                              : SemiFamily::Binormal;
      PairwiseDesign design = build_pairwise_design(sample);
      SemiFit fit = (family == SemiFamily::Biexponential)
                        ? fit_semi_biexponential(design)
                        : fit_semi_binormal(design);
      BandConfig bc;
      bc.replicates = config.bootstrap_replicates;
      bc.level = config.level;
      bc.fpr_grid = grid;
      bc.seed = boot_seed;
      bc.workers = 1;
      RocCurveEstimate band = bootstrap_band(
          sample,
          [&](const TwoGroupSample& s, std::span<const double> g) {
            PairwiseDesign d = build_pairwise_design(s);
            SemiFit f = (family == SemiFamily::Biexponential)
                            ? fit_semi_biexponential(d, fit.alpha)
                            : fit_semi_binormal(d, fit.beta0, fit.beta1);
            std::vector<double> vals(g.size());
            for (std::size_t k = 0; k < g.size(); ++k)
              vals[k] = semi_curve(f, g[k]);
            return vals;
          },
          bc,
          family == SemiFamily::Biexponential ? CurveMethod::SemiBiexp
                                              : CurveMethod::SemiBinorm);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out[k] = MethodCell{band.points[k + 1].tpr, band.band[k + 1].lower,
                            band.band[k + 1].upper};
      }
      return out;
    }
  }
  throw std::logic_error("eval_method: unknown method");
}

}  // namespace

ScenarioReport run_scenario(const Dgm& dgm, const ScenarioConfig& config) {
  if (config.methods.empty())
    throw validation_error("run_scenario: no methods requested");
  if (config.replicates < 1)
    throw validation_error("run_scenario: need at least one replicate");
  for (double p : config.p_grid)
    if (!(p > 0.0 && p < 1.0))
      throw validation_error("run_scenario: grid values must lie in (0, 1)");

  std::size_t n_methods = config.methods.size();
  std::size_t n_grid = config.p_grid.size();

  // One slot per (replicate, method); deterministic regardless of scheduling.
  std::vector<std::vector<std::optional<MethodOutcome>>> outcomes(
      config.replicates, std::vector<std::optional<MethodOutcome>>(n_methods));

  parallel_for_index(config.replicates, config.workers, [&](std::size_t r) {
    RngStream data_rng(config.seed, static_cast<std::uint64_t>(r + 1));
    TwoGroupSample sample = sample_dgm(dgm, config.n0, config.n1, data_rng);
    std::uint64_t boot_seed =
        derive_seed(config.seed, static_cast<std::uint64_t>(r + 1));
    for (std::size_t m = 0; m < n_methods; ++m) {
      try {
        outcomes[r][m] =
            eval_method(config.methods[m], sample, config.p_grid, config, boot_seed);
      } catch (const std::exception&) {
        // failure recorded as missing outcome
      }
    }
  });

  ScenarioReport report;
  report.scenario = dgm.label();
  report.n0 = config.n0;
  report.n1 = config.n1;
  report.replicates = config.replicates;

  for (std::size_t m = 0; m < n_methods; ++m) {
    std::size_t failures = 0;
    for (std::size_t r = 0; r < config.replicates; ++r)
      if (!outcomes[r][m]) ++failures;
    if (failures * 10 > config.replicates)
      report.flagged.push_back(config.methods[m]);

    for (std::size_t k = 0; k < n_grid; ++k) {
      ScenarioRecord rec;
      rec.method = config.methods[m];
      rec.n0 = config.n0;
      rec.n1 = config.n1;
      rec.p = config.p_grid[k];
      rec.true_roc = true_roc(dgm, rec.p);
      double sum_est = 0.0, sum_width = 0.0;
      std::size_t covered = 0, used = 0;
      for (std::size_t r = 0; r < config.replicates; ++r) {
        if (!outcomes[r][m]) continue;
        const MethodCell& cell = (*outcomes[r][m])[k];
        sum_est += cell.estimate;
        sum_width += cell.upper - cell.lower;
        if (cell.lower <= rec.true_roc && rec.true_roc <= cell.upper) ++covered;
        ++used;
      }
      rec.replicates_used = used;
      rec.failures = failures;
      if (used > 0) {
        rec.mean_estimate = sum_est / static_cast<double>(used);
        rec.mean_ci_width = sum_width / static_cast<double>(used);
        rec.coverage = static_cast<double>(covered) / static_cast<double>(used);
      }
      report.records.push_back(rec);
    }
  }
  return report;
}

ScenarioReport merge_reports(const std::vector<ScenarioReport>& parts) {
  ScenarioReport merged;
  if (parts.empty()) return merged;
  merged = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const ScenarioReport& part = parts[i];
    merged.records.insert(merged.records.end(), part.records.begin(),
                          part.records.end());
    for (SimMethod m : part.flagged) merged.flagged.push_back(m);
  }
  return merged;
}

void export_report(const ScenarioReport& report, std::ostream& out) {
  out << "scenario,method,n0,n1,p,true_roc,mean_est,mean_width,coverage,failures\n";
  for (const auto& rec : report.records) {
    out << report.scenario << ',' << sim_method_name(rec.method) << ','
        << rec.n0 << ',' << rec.n1 << ',' << fmt(rec.p) << ','
        << fmt(rec.true_roc) << ',' << fmt(rec.mean_estimate) << ','
        << fmt(rec.mean_ci_width) << ',' << fmt(rec.coverage) << ','
        << rec.failures << '\n';
  }
}

void export_report_to_file(const ScenarioReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  export_report(report, out);
  out.flush();
  if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace roc
