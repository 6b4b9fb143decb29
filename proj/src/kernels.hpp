// SPDX-License-Identifier: Apache-2.0
// Integrals shared by the sigma-1 and sigma-2 boundary estimators.
#pragma once

#include <vector>

#include "ordscale/numeric.hpp"

namespace ordscale::detail {

//! Quadrature settings for estimator integrals: a pure relative criterion,
//! since the kernels are positive and span many orders of magnitude.
numeric::Tolerance kernel_tolerance();

//! log of the integral over [0, 1] of w^q (A + B w)^(-e); q > -1, A, B >= 0,
//! A + B > 0. The peak of the integrand is located analytically and the
//! interval is broken up geometrically around it.
double log_power_kernel(double q, double A, double B, double e);

//! Breakpoints 0 = x_0 < ... < x_k = hi (hi may be +inf) clustered
//! geometrically around `peak` with spacing starting at `scale`.
std::vector<double> breakpoints_around(double peak, double scale, double hi);

}  // namespace ordscale::detail
