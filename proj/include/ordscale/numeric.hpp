// SPDX-License-Identifier: Apache-2.0
//! Quadrature, bracketed root finding and the gamma-function family used by
//! every estimator.
#pragma once

#include <functional>
#include <vector>

namespace ordscale::numeric {

struct Tolerance
{
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_iter = 200;

    //! Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_iter >= 1.
    void validate() const;
};

using RealFunction = std::function<double(double)>;

//! Adaptive 15-point Gauss-Kronrod quadrature with global bisection of the
//! interval carrying the largest error estimate.
//!
//! `hi` may be +infinity; the tail is then mapped onto [0, 1) with
//! t = lo + u / (1 - u). `max_iter` bounds the number of subdivisions.
//! Throws NumericalError on non-convergence and InputError if the integrand
//! returns NaN.
double integrate(const RealFunction& f, double lo, double hi, Tolerance tol = {});

//! Integral of exp(log_f) over [lo, hi], returned as a logarithm.
//!
//! The integrand is rescaled by its maximum over a sampling grid before
//! integrating, so integrals that under- or overflow a double are still
//! resolved to `tol.rel_tol`. Returns -infinity for an identically-zero
//! integrand.
double log_integrate(const RealFunction& log_f, double lo, double hi, Tolerance tol = {});

//! Piecewise variant of log_integrate for integrands whose peak location is
//! known analytically. `breakpoints` must be ascending; the first is the
//! finite lower limit, the last may be +infinity. The integrand is rescaled
//! by its largest value at the interior breakpoints.
double log_integrate_pieces(const RealFunction& log_f, std::vector<double> const& breakpoints,
                            Tolerance tol = {});

//! Brent's method on a sign-changing bracket. Throws NumericalError if
//! f(lo) and f(hi) have the same sign.
double find_root(const RealFunction& f, double lo, double hi, Tolerance tol = {});

//! ln Gamma(x) for x > 0 (Lanczos, g = 7). Throws DomainError for x <= 0.
double log_gamma(double x);

//! Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
double upper_reg_gamma(double s, double x);

//! Regularized lower incomplete gamma P(s, x) = 1 - Q(s, x), accurate also
//! when P is tiny.
double lower_reg_gamma(double s, double x);

}  // namespace ordscale::numeric
