// SPDX-License-Identifier: Apache-2.0
//! Estimators of the smaller scale parameter sigma_1 under sigma_1 <= sigma_2.
#pragma once

#include "ordscale/censored_model.hpp"
#include "ordscale/loss.hpp"

namespace ordscale {

//! Sufficient statistics of both populations, viewed from population 1.
struct Sigma1Inputs
{
    SufficientStats s1;
    SufficientStats s2;

    void validate() const;

    [[nodiscard]] int m1() const { return s1.scheme.shape(); }
    [[nodiscard]] int m2() const { return s2.scheme.shape(); }
    [[nodiscard]] int m() const { return m1() + m2(); }
    //! v2 / v1.
    [[nodiscard]] double z1() const { return s2.v / s1.v; }
    //! x_{a1} / v1.
    [[nodiscard]] double z2() const { return s1.x_a / s1.v; }
    //! x_{a2} / v1.
    [[nodiscard]] double z3() const { return s2.x_a / s1.v; }
};

double baee1(Sigma1Inputs const& in, LossKind const& kind);

//! min{c01, beta (1 + z1)} v1 with beta = stein_constant(m + 1).
double stein1_s1(Sigma1Inputs const& in, LossKind const& kind);

//! min{c01, beta (1 + z1 + kappa1 z2)} v1 with beta = stein_constant(m + 2);
//! the BAEE when z2 <= 0.
double stein1_s2(Sigma1Inputs const& in, LossKind const& kind);

//! min{c01, beta (1 + z1 + kappa1 z2 + kappa2 z3)} v1 with
//! beta = stein_constant(m + 3); the BAEE unless z2 > 0 and z3 > 0.
double stein1_s3(Sigma1Inputs const& in, LossKind const& kind);

//! min{v1 / (m1 + 1), (v1 + v2) / (m + 2)}.
double restricted_mle1(Sigma1Inputs const& in);

//! min{restricted_mle1 / v1, beta (1 + z1)} v1 with beta = stein_constant(m + 1).
double improved_rmle1(Sigma1Inputs const& in, LossKind const& kind);

//! Boundary function of the integral-expression-of-risk-difference class;
//! the estimator is kubokawa_phi1(kind, v2 / v1, m1, m2) * v1. Custom losses
//! are handled by quadrature plus root finding.
double kubokawa_phi1(LossKind const& kind, double u1, int m1, int m2);

//! Smooth alpha-family (alpha >= 1) whose power-kernel exponents are scaled
//! by alpha; alpha = 1 recovers kubokawa_phi1. Named losses only.
double maruyama_phi1(LossKind const& kind, double alpha, double u1, int m1, int m2);

//! Generalized Bayes estimator under the order-restricted prior
//! 1 / (sigma1 sigma2), evaluated as ratios of single integrals over
//! x in (0, v2 / v1). Named losses only.
double gen_bayes1(LossKind const& kind, double v1, double v2, int m1, int m2);

struct StrawdermanParams
{
    double epsilon = 1.0;
    LossKind loss = LossKind::quadratic();
};

struct StrawdermanResult
{
    double value = 0.0;
    //! Shrinkage bound r-bar used in phi(z) = r-bar / (1 + z)^epsilon.
    double bound = 0.0;
    //! False when the dominance conditions admit no shrinkage (r-bar <= 0);
    //! the value is then the BAEE.
    bool improvement_available = false;
};

//! Upper bound r-bar for the shrinkage function, before clamping to [0, 1).
//! Quadratic and entropy losses only.
double strawderman_bound(LossKind const& kind, int m1, int m2, double epsilon);

//! (1 - phi(z1)) c01 v1 with phi(z) = r-bar / (1 + z)^epsilon.
StrawdermanResult strawderman1(Sigma1Inputs const& in, StrawdermanParams const& params);

}  // namespace ordscale
