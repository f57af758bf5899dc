// Special functions needed by the estimators: standard normal CDF/quantile/
// density, Student-t CDF/quantile (fractional df), and the chi-square
// survival function. Nothing here is a general-purpose distribution library;
// only what the ROC machinery requires.

#pragma once

namespace roc {

// Standard normal density.
double normal_pdf(double z);

// Standard normal CDF, Phi(z). Absolute error below 1e-15; saturates to
// exactly 0/1 deep in the tails.
double normal_cdf(double z);

// Inverse of normal_cdf. Requires 0 < p < 1, otherwise throws
// std::domain_error. Round-trips with normal_cdf to ~1e-13.
double normal_quantile(double p);

// Student-t CDF with (possibly fractional) df > 0.
double student_t_cdf(double t, double df);

// Inverse Student-t CDF. Requires 0 < p < 1 and df > 0; converges to
// normal_quantile(p) as df grows.
double t_quantile(double p, double df);

// Survival function P(X > x) for X ~ chi-square with df >= 1 degrees of
// freedom. Requires x >= 0.
double chi2_sf(double x, int df);

// Regularized incomplete beta I_x(a, b), exposed for the t distribution and
// for cross-checks in tests.
double incomplete_beta(double x, double a, double b);

// Regularized incomplete gamma functions P(a, x) (lower) and Q(a, x) (upper).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

}  // namespace roc
