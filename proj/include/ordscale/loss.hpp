// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "ordscale/numeric.hpp"

namespace ordscale {

enum class LossFamily
{
    quadratic,  //!< (t - 1)^2
    entropy,    //!< t - ln t - 1
    symmetric,  //!< t + 1/t - 2
    custom,     //!< user-supplied value and derivative
};

//! Scale-invariant bowl-shaped loss L(t), t = estimate / true scale.
class LossKind
{
public:
    static LossKind quadratic();
    static LossKind entropy();
    static LossKind symmetric();

    //! User-supplied loss. The bowl shape (L(1) = 0, L >= 0, decreasing on
    //! (0, 1], increasing on [1, inf)) is checked on a log-spaced grid and a
    //! DomainError is thrown if it fails.
    static LossKind custom(std::string name, numeric::RealFunction value, numeric::RealFunction derivative);

    [[nodiscard]] LossFamily family() const { return family_; }
    [[nodiscard]] std::string const& name() const { return name_; }
    [[nodiscard]] bool is_named() const { return family_ != LossFamily::custom; }

    [[nodiscard]] double value(double t) const;
    [[nodiscard]] double derivative(double t) const;

private:
    LossKind(LossFamily family, std::string name, numeric::RealFunction value = {},
             numeric::RealFunction derivative = {});

    LossFamily family_;
    std::string name_;
    numeric::RealFunction value_;
    numeric::RealFunction derivative_;
};

//! "quadratic" / "entropy" / "symmetric" (aliases L1, L2, L3); throws InputError otherwise.
LossKind parse_loss(std::string_view text);

double loss_value(LossKind const& kind, double t);
double loss_deriv(LossKind const& kind, double t);

//! c solving E[L'(cV) V] = 0 with V ~ Gamma(m, 1); m >= 2.
double baee_constant(LossKind const& kind, int m);

//! beta solving E[L'(beta Z)] = 0 with Z ~ Gamma(k, 1). Requires k >= 1
//! (quadratic), k >= 2 (entropy), k >= 3 (symmetric).
double stein_constant(LossKind const& kind, int k);

//! The same constants through quadrature and root finding only, ignoring
//! any closed form. Used for custom losses and as a cross-check.
double baee_constant_numeric(LossKind const& kind, int m);
double stein_constant_numeric(LossKind const& kind, int k);

//! E[L'(c Z)] for Z ~ Gamma(k, 1), evaluated by quadrature.
double expected_loss_deriv(LossKind const& kind, double c, double k);

}  // namespace ordscale
