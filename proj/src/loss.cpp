// SPDX-License-Identifier: Apache-2.0
#include "ordscale/loss.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "ordscale/errors.hpp"

namespace ordscale {
namespace {

void require_positive(double t)
{
    if (!(t > 0.0) || std::isinf(t))
    {
        throw DomainError("loss argument must be a finite positive number");
    }
}

int min_stein_shape(LossFamily family)
{
    switch (family)
    {
    case LossFamily::quadratic:
        return 1;
    case LossFamily::entropy:
        return 2;
    case LossFamily::symmetric:
    case LossFamily::custom:
        return 3;
    }
    return 3;
}

}  // namespace

LossKind::LossKind(LossFamily family, std::string name, numeric::RealFunction value,
                   numeric::RealFunction derivative)
    : family_(family)
    , name_(std::move(name))
    , value_(std::move(value))
    , derivative_(std::move(derivative))
{
}

LossKind LossKind::quadratic() { return {LossFamily::quadratic, "quadratic"}; }
LossKind LossKind::entropy() { return {LossFamily::entropy, "entropy"}; }
LossKind LossKind::symmetric() { return {LossFamily::symmetric, "symmetric"}; }

LossKind LossKind::custom(std::string name, numeric::RealFunction value, numeric::RealFunction derivative)
{
    if (!value || !derivative)
    {
        throw DomainError("custom loss requires both a value and a derivative function");
    }
    LossKind kind{LossFamily::custom, std::move(name), std::move(value), std::move(derivative)};
    if (std::abs(kind.value(1.0)) > 1e-12)
    {
        throw DomainError("custom loss '" + kind.name() + "' must satisfy L(1) = 0");
    }
    // Log-spaced grid over [e^-4, e^4] with t = 1 as an exact grid point.
    constexpr int kSteps = 80;
    double previous = kind.value(std::exp(-4.0));
    for (int i = 1; i <= 2 * kSteps; ++i)
    {
        double const t = std::exp(-4.0 + 4.0 * i / kSteps);
        double const current = i == kSteps ? kind.value(1.0) : kind.value(t);
        if (!(current >= 0.0))
        {
            throw DomainError("custom loss '" + kind.name() + "' is negative or NaN at t = " + std::to_string(t));
        }
        bool const rising = i > kSteps;
        if (rising ? current < previous : current > previous)
        {
            throw DomainError("custom loss '" + kind.name() + "' is not bowl-shaped around t = " + std::to_string(t));
        }
        previous = current;
    }
    return kind;
}

double LossKind::value(double t) const
{
    require_positive(t);
    switch (family_)
    {
    case LossFamily::quadratic:
        return (t - 1.0) * (t - 1.0);
    case LossFamily::entropy:
        return t - std::log(t) - 1.0;
    case LossFamily::symmetric:
        return t + 1.0 / t - 2.0;
    case LossFamily::custom:
        return value_(t);
    }
    return 0.0;
}

double LossKind::derivative(double t) const
{
    require_positive(t);
    switch (family_)
    {
    case LossFamily::quadratic:
        return 2.0 * (t - 1.0);
    case LossFamily::entropy:
        return 1.0 - 1.0 / t;
    case LossFamily::symmetric:
        return 1.0 - 1.0 / (t * t);
    case LossFamily::custom:
        return derivative_(t);
    }
    return 0.0;
}

LossKind parse_loss(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "quadratic" || s == "l1")
    {
        return LossKind::quadratic();
    }
    if (s == "entropy" || s == "l2")
    {
        return LossKind::entropy();
    }
    if (s == "symmetric" || s == "l3")
    {
        return LossKind::symmetric();
    }
    throw InputError("unknown loss '" + std::string(text) + "' (expected quadratic, entropy or symmetric)");
}

double loss_value(LossKind const& kind, double t) { return kind.value(t); }
double loss_deriv(LossKind const& kind, double t) { return kind.derivative(t); }

double baee_constant(LossKind const& kind, int m)
{
    if (m < 2)
    {
        throw DomainError("BAEE constant requires m >= 2");
    }
    // E[L'(cV) V] with V ~ Gamma(m) is proportional to E[L'(cZ)], Z ~ Gamma(m + 1).
    return stein_constant(kind, m + 1);
}

double stein_constant(LossKind const& kind, int k)
{
    if (k < min_stein_shape(kind.family()))
    {
        throw DomainError("Stein constant for " + kind.name() + " loss requires k >= "
                          + std::to_string(min_stein_shape(kind.family())) + " (got " + std::to_string(k) + ")");
    }
    double const kd = k;
    switch (kind.family())
    {
    case LossFamily::quadratic:
        return 1.0 / kd;
    case LossFamily::entropy:
        return 1.0 / (kd - 1.0);
    case LossFamily::symmetric:
        return 1.0 / std::sqrt((kd - 1.0) * (kd - 2.0));
    case LossFamily::custom:
        return stein_constant_numeric(kind, k);
    }
    return 0.0;
}

double expected_loss_deriv(LossKind const& kind, double c, double k)
{
    double const log_norm = numeric::log_gamma(k);
    auto integrand = [&](double t) {
        if (t <= 0.0)
        {
            return 0.0;
        }
        double const weight = std::exp((k - 1.0) * std::log(t) - t - log_norm);
        return weight == 0.0 ? 0.0 : kind.derivative(c * t) * weight;
    };
    numeric::Tolerance tol;
    tol.abs_tol = 1e-13;
    tol.rel_tol = 1e-12;
    tol.max_iter = 2000;
    // Split at the mode so both pieces are well resolved.
    double const mode = std::max(k - 1.0, 1.0);
    return numeric::integrate(integrand, 0.0, mode, tol) + numeric::integrate(integrand, mode, INFINITY, tol);
}

double stein_constant_numeric(LossKind const& kind, int k)
{
    if (k < min_stein_shape(kind.family()))
    {
        throw DomainError("Stein constant requires k >= " + std::to_string(min_stein_shape(kind.family())));
    }
    double const kd = k;
    auto g = [&](double c) { return expected_loss_deriv(kind, c, kd); };
    double lo = 0.5 / kd;
    double hi = 2.0 / kd;
    for (int i = 0; i < 60 && g(lo) >= 0.0; ++i)
    {
        lo *= 0.5;
    }
    for (int i = 0; i < 60 && g(hi) <= 0.0; ++i)
    {
        hi *= 2.0;
    }
    numeric::Tolerance tol;
    tol.abs_tol = 1e-15;
    tol.rel_tol = 1e-13;
    return numeric::find_root(g, lo, hi, tol);
}

double baee_constant_numeric(LossKind const& kind, int m)
{
    if (m < 2)
    {
        throw DomainError("BAEE constant requires m >= 2");
    }
    return stein_constant_numeric(kind, m + 1);
}

}  // namespace ordscale
