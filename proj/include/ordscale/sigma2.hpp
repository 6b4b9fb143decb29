// SPDX-License-Identifier: Apache-2.0
//! Estimators of the larger scale parameter sigma_2 under sigma_1 <= sigma_2.
#pragma once

#include "ordscale/censored_model.hpp"
#include "ordscale/loss.hpp"

namespace ordscale {

//! Sufficient statistics of both populations, viewed from population 2.
struct Sigma2Inputs
{
    SufficientStats s1;
    SufficientStats s2;

    void validate() const;

    [[nodiscard]] int m1() const { return s1.scheme.shape(); }
    [[nodiscard]] int m2() const { return s2.scheme.shape(); }
    [[nodiscard]] int m() const { return m1() + m2(); }
    //! v1 / v2.
    [[nodiscard]] double z_star() const { return s1.v / s2.v; }
    //! x_{a2} / v2.
    [[nodiscard]] double z1_star() const { return s2.x_a / s2.v; }
};

double baee2(Sigma2Inputs const& in, LossKind const& kind);

//! max{c02, beta (1 + z*)} v2 with beta = stein_constant(m + 1).
double stein2_s1(Sigma2Inputs const& in, LossKind const& kind);

//! min{c02, beta (1 + kappa2 z1*)} v2 with beta = stein_constant(m2 + 2);
//! the BAEE when z1* <= 0.
double stein2_s2(Sigma2Inputs const& in, LossKind const& kind);

//! Double shrinkage (phi21 + phi22 - c02) v2 combining stein2_s1 and stein2_s2.
double double_shrink2(Sigma2Inputs const& in, LossKind const& kind);

//! max{v2 / (m2 + 1), (v1 + v2) / (m + 2)}.
double restricted_mle2(Sigma2Inputs const& in);

//! max{restricted_mle2 / v2, beta (1 + z*)} v2 with beta = stein_constant(m + 1).
double improved_rmle2(Sigma2Inputs const& in, LossKind const& kind);

//! Boundary function for sigma_2; the estimator is
//! kubokawa_phi2(kind, v1 / v2, m1, m2) * v2. The inner integral is the
//! regularized upper incomplete gamma, leaving one quadrature in t.
double kubokawa_phi2(LossKind const& kind, double u2, int m1, int m2);

//! Smooth alpha-family for sigma_2 (alpha >= 1, u2 > 0), named losses only.
double maruyama_phi2(LossKind const& kind, double alpha, double u2, int m1, int m2);

//! Generalized Bayes estimator for sigma_2 under the order-restricted prior,
//! evaluated as a raw nested double quadrature. Named losses only.
double gen_bayes2(LossKind const& kind, double v1, double v2, int m1, int m2);

}  // namespace ordscale
