// SPDX-License-Identifier: Apache-2.0
#include "ordscale/sigma1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kernels.hpp"
#include "ordscale/errors.hpp"

namespace ordscale {
namespace {

using numeric::log_gamma;

void require_shapes(int m1, int m2)
{
    if (m1 < 2 || m2 < 2)
    {
        throw SchemeError("both populations need b - a >= 2 (got " + std::to_string(m1) + " and "
                          + std::to_string(m2) + ")");
    }
}

void require_named(LossKind const& kind, char const* what)
{
    if (!kind.is_named())
    {
        throw DomainError(std::string(what) + " is only defined for the quadratic, entropy and symmetric losses");
    }
}

// log of the integral over [0, 1] of y^p (y u + 1)^(-e).
double log_kernel(double p, double e, double u)
{
    return detail::log_power_kernel(p, 1.0, u, e);
}

// phi for power-kernel boundary functions with exponents scaled by alpha.
double scaled_boundary(LossKind const& kind, double alpha, double u, int m1, int m2)
{
    double const m = m1 + m2;
    double const p = alpha * (m2 - 1);
    switch (kind.family())
    {
    case LossFamily::quadratic:
        return std::exp(log_kernel(p, alpha * (m + 1), u) - log_kernel(p, alpha * (m + 2), u)) / (m + 1);
    case LossFamily::entropy:
        return std::exp(log_kernel(p, alpha * m, u) - log_kernel(p, alpha * (m + 1), u)) / m;
    case LossFamily::symmetric:
        return std::sqrt(std::exp(log_kernel(p, alpha * (m - 1), u) - log_kernel(p, alpha * (m + 1), u))
                         / ((m - 1) * m));
    case LossFamily::custom:
        break;
    }
    throw DomainError("power-kernel boundary requires a named loss");
}

// Root c of the integral over t of L'(c t) t^(m1) e^(-t) P(m2, u t).
double kubokawa_phi1_generic(LossKind const& kind, double u, int m1, int m2)
{
    int const m = m1 + m2;
    if (u == 0.0)
    {
        return stein_constant_numeric(kind, m + 1);
    }
    double const shift = m1 * std::log(static_cast<double>(m1)) - m1;
    auto weight = [=](double t) {
        if (t <= 0.0)
        {
            return 0.0;
        }
        double const base = std::exp(m1 * std::log(t) - t - shift);
        return base == 0.0 ? 0.0 : base * numeric::lower_reg_gamma(m2, u * t);
    };
    std::vector<double> const points = detail::breakpoints_around(static_cast<double>(m), std::sqrt(m), INFINITY);
    auto piecewise = [&](auto const& f, numeric::Tolerance tol) {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < points.size(); ++i)
        {
            total += numeric::integrate(f, points[i], points[i + 1], tol);
        }
        return total;
    };
    double const norm = piecewise(weight, detail::kernel_tolerance());
    if (!(norm > 0.0))
    {
        throw NumericalError("boundary weight vanished; u is too small for the generic route");
    }
    numeric::Tolerance tol = detail::kernel_tolerance();
    tol.abs_tol = 1e-14 * norm;
    auto g = [&](double c) {
        return piecewise([&](double t) { return t <= 0.0 ? 0.0 : kind.derivative(c * t) * weight(t); }, tol) / norm;
    };
    double lo = 0.5 / (m + 1);
    double hi = 2.0 / (m + 1);
    for (int i = 0; i < 60 && g(lo) >= 0.0; ++i)
    {
        lo *= 0.5;
    }
    for (int i = 0; i < 60 && g(hi) <= 0.0; ++i)
    {
        hi *= 2.0;
    }
    numeric::Tolerance root_tol;
    root_tol.abs_tol = 1e-15;
    root_tol.rel_tol = 1e-12;
    return numeric::find_root(g, lo, hi, root_tol);
}

// log of the integral over (0, z) of x^p (1 + x)^(-e), split at x = 1 with
// x = 1 / w on the upper part so that large z stays well conditioned.
double log_bayes_integral(double p, double e, double z)
{
    auto lower = [=](double x) { return (p == 0.0 ? 0.0 : p * std::log(x)) - e * std::log1p(x); };
    double const head = numeric::log_integrate(lower, 0.0, std::min(z, 1.0), detail::kernel_tolerance());
    if (z <= 1.0)
    {
        return head;
    }
    auto upper = [=](double w) { return (e - p - 2.0) * std::log(w) - e * std::log1p(w); };
    double const tail = numeric::log_integrate(upper, 1.0 / z, 1.0, detail::kernel_tolerance());
    double const top = std::max(head, tail);
    return top + std::log(std::exp(head - top) + std::exp(tail - top));
}

double clamp_below_one(double r)
{
    return std::min(r, std::nextafter(1.0, 0.0));
}

}  // namespace

void Sigma1Inputs::validate() const
{
    s1.validate();
    s2.validate();
}

double baee1(Sigma1Inputs const& in, LossKind const& kind)
{
    return baee_constant(kind, in.m1()) * in.s1.v;
}

double stein1_s1(Sigma1Inputs const& in, LossKind const& kind)
{
    double const c0 = baee_constant(kind, in.m1());
    double const beta = stein_constant(kind, in.m() + 1);
    return std::min(c0, beta * (1.0 + in.z1())) * in.s1.v;
}

double stein1_s2(Sigma1Inputs const& in, LossKind const& kind)
{
    double const c0 = baee_constant(kind, in.m1());
    if (!(in.z2() > 0.0))
    {
        return c0 * in.s1.v;
    }
    double const beta = stein_constant(kind, in.m() + 2);
    return std::min(c0, beta * (1.0 + in.z1() + in.s1.scheme.kappa * in.z2())) * in.s1.v;
}

double stein1_s3(Sigma1Inputs const& in, LossKind const& kind)
{
    double const c0 = baee_constant(kind, in.m1());
    if (!(in.z2() > 0.0 && in.z3() > 0.0))
    {
        return c0 * in.s1.v;
    }
    double const beta = stein_constant(kind, in.m() + 3);
    double const bound = 1.0 + in.z1() + in.s1.scheme.kappa * in.z2() + in.s2.scheme.kappa * in.z3();
    return std::min(c0, beta * bound) * in.s1.v;
}

double restricted_mle1(Sigma1Inputs const& in)
{
    return std::min(in.s1.v / (in.m1() + 1.0), (in.s1.v + in.s2.v) / (in.m() + 2.0));
}

double improved_rmle1(Sigma1Inputs const& in, LossKind const& kind)
{
    double const beta = stein_constant(kind, in.m() + 1);
    return std::min(restricted_mle1(in), beta * (1.0 + in.z1()) * in.s1.v);
}

double kubokawa_phi1(LossKind const& kind, double u1, int m1, int m2)
{
    require_shapes(m1, m2);
    if (!(u1 >= 0.0) || std::isinf(u1))
    {
        throw DomainError("kubokawa_phi1 requires a finite u1 >= 0");
    }
    if (!kind.is_named())
    {
        return kubokawa_phi1_generic(kind, u1, m1, m2);
    }
    return scaled_boundary(kind, 1.0, u1, m1, m2);
}

double maruyama_phi1(LossKind const& kind, double alpha, double u1, int m1, int m2)
{
    require_shapes(m1, m2);
    require_named(kind, "the alpha-family estimator");
    if (!(alpha >= 1.0) || std::isinf(alpha))
    {
        throw DomainError("maruyama_phi1 requires a finite alpha >= 1");
    }
    if (!(u1 >= 0.0) || std::isinf(u1))
    {
        throw DomainError("maruyama_phi1 requires a finite u1 >= 0");
    }
    return scaled_boundary(kind, alpha, u1, m1, m2);
}

double gen_bayes1(LossKind const& kind, double v1, double v2, int m1, int m2)
{
    require_shapes(m1, m2);
    require_named(kind, "the generalized Bayes estimator");
    if (!(v1 > 0.0) || !(v2 > 0.0) || std::isinf(v1) || std::isinf(v2))
    {
        throw DomainError("gen_bayes1 requires finite v1, v2 > 0");
    }
    double const m = m1 + m2;
    double const p = m2 - 1.0;
    double const z = v2 / v1;
    // After integrating t analytically: Gamma(k + 1) / (x + 1)^(k + 1).
    auto moment = [&](double k) { return log_gamma(k + 1.0) + log_bayes_integral(p, k + 1.0, z); };
    switch (kind.family())
    {
    case LossFamily::quadratic:
        return v1 * std::exp(moment(m) - moment(m + 1));
    case LossFamily::entropy:
        return v1 * std::exp(moment(m - 1) - moment(m));
    case LossFamily::symmetric:
        return v1 * std::sqrt(std::exp(moment(m - 2) - moment(m)));
    case LossFamily::custom:
        break;
    }
    throw DomainError("gen_bayes1 requires a named loss");
}

double strawderman_bound(LossKind const& kind, int m1, int m2, double epsilon)
{
    require_shapes(m1, m2);
    if (!(epsilon > 0.0) || std::isinf(epsilon))
    {
        throw DomainError("Strawderman shrinkage requires a finite epsilon > 0");
    }
    double const c = baee_constant(kind, m1);
    double const m = m1 + m2;
    double const e = epsilon;
    switch (kind.family())
    {
    case LossFamily::quadratic: {
        double const k = c * (m1 + 2.0);
        double const r = 2.0 * (k - 1.0) / k;
        double const r1 = std::exp(log_gamma(m1 + 1.0) + log_gamma(m + e + 1.0) - log_gamma(m + 1.0)
                                   - log_gamma(m1 + e + 1.0))
                          - 2.0
                                * std::exp(log_gamma(m1) + log_gamma(m + e + 1.0) - log_gamma(m1 + e + 1.0)
                                           - log_gamma(m))
                                / (c * (m + 2.0));
        return std::min(r, r1);
    }
    case LossFamily::entropy: {
        double const cm = c * m;
        double r_star = 0.0;
        if (cm > 1.0)
        {
            auto f = [cm](double r) { return cm + std::log1p(-r) / r; };
            numeric::Tolerance tol;
            tol.abs_tol = 1e-15;
            tol.rel_tol = 1e-14;
            double const top = clamp_below_one(1.0);
            r_star = f(top) >= 0.0 ? top : numeric::find_root(f, 1e-12, top, tol);
        }
        double const B = std::exp(log_gamma(m1 + e) + log_gamma(m + e + 1.0) - log_gamma(m + e)
                                  - log_gamma(m1 + e + 1.0));
        return std::min({r_star, 1.0 / (1.0 + e), B / m});
    }
    case LossFamily::symmetric:
    case LossFamily::custom:
        break;
    }
    throw DomainError("Strawderman-type shrinkage is only available for the quadratic and entropy losses");
}

StrawdermanResult strawderman1(Sigma1Inputs const& in, StrawdermanParams const& params)
{
    double const bound = strawderman_bound(params.loss, in.m1(), in.m2(), params.epsilon);
    double const c0 = baee_constant(params.loss, in.m1());
    if (!(bound > 0.0))
    {
        return {c0 * in.s1.v, 0.0, false};
    }
    double const r = clamp_below_one(bound);
    double const phi = r / std::pow(1.0 + in.z1(), params.epsilon);
    return {(1.0 - phi) * c0 * in.s1.v, r, true};
}

}  // namespace ordscale
