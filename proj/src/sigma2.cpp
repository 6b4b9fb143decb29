// SPDX-License-Identifier: Apache-2.0
#include "ordscale/sigma2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kernels.hpp"
#include "ordscale/errors.hpp"

namespace ordscale {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Below this u2 the [1, inf) power kernel degenerates and the incomplete-gamma
// form of the sigma2 boundary is used instead.
constexpr double kPowerKernelMinU = 1e-6;

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

// Breakpoints for integrands behaving like t^q e^{-t} Q(m1, t u).
std::vector<double> outer_breakpoints(double q, int m1, double u)
{
    double const centre = std::max(q + m1 - 1.0, 1.0) / (1.0 + u);
    std::vector<double> points = detail::breakpoints_around(centre, std::sqrt(std::max(q + m1, 1.0)) / (1.0 + u),
                                                            std::numeric_limits<double>::infinity());
    if (q > centre * (1.0 + 1e-9))
    {
        points.insert(std::upper_bound(points.begin(), points.end() - 1, q), q);
        points.erase(std::unique(points.begin(), points.end()), points.end());
    }
    return points;
}

// log of the integral over t in (0, inf) of t^q e^{-t} Q(m1, t u).
double log_outer(double q, int m1, double u)
{
    auto log_f = [=](double t) {
        if (t <= 0.0)
        {
            return q == 0.0 ? 0.0 : kNegInf;
        }
        double const tail = numeric::upper_reg_gamma(m1, t * u);
        if (tail <= 0.0)
        {
            return kNegInf;
        }
        return (q == 0.0 ? 0.0 : q * std::log(t)) - t + std::log(tail);
    };
    return numeric::log_integrate_pieces(log_f, outer_breakpoints(q, m1, u), detail::kernel_tolerance());
}

// Root c of the integral over t of L'(c t) t^(m2) e^(-t) Q(m1, t u).
double kubokawa_phi2_generic(LossKind const& kind, double u, int m1, int m2)
{
    double const shift = m2 * std::log(static_cast<double>(m2)) - m2;
    auto weight = [=](double t) {
        if (t <= 0.0)
        {
            return 0.0;
        }
        double const base = std::exp(m2 * std::log(t) - t - shift);
        return base == 0.0 ? 0.0 : base * numeric::upper_reg_gamma(m1, u * t);
    };
    std::vector<double> const points = outer_breakpoints(m2, m1, u);
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
        throw NumericalError("boundary weight vanished; u is too large for the generic route");
    }
    numeric::Tolerance tol = detail::kernel_tolerance();
    tol.abs_tol = 1e-14 * norm;
    auto g = [&](double c) {
        return piecewise([&](double t) { return t <= 0.0 ? 0.0 : kind.derivative(c * t) * weight(t); }, tol) / norm;
    };
    double lo = 0.5 / (m2 + 1);
    double hi = 2.0 / (m2 + 1);
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

// log of the integral over [1, inf) of y^p (y u + 1)^(-e), via y = 1 / w.
double log_tail_kernel(double p, double e, double u)
{
    if (!(e - p - 1.0 > 0.0))
    {
        throw DomainError("alpha-family integral diverges: requires e - p > 1 (got e = " + std::to_string(e)
                          + ", p = " + std::to_string(p) + ")");
    }
    return detail::log_power_kernel(e - p - 2.0, u, 1.0, e);
}

// log of the raw double integral over t in (0, inf), x in (t u, inf) of
// t^(m2 - 1 + k) e^{-t} x^(m1 - 1) e^{-x} / Gamma(m1).
double log_double_integral(double k, int m1, int m2, double u)
{
    double const log_norm = numeric::log_gamma(m1);
    auto inner = [=](double t) {
        double const lo = t * u;
        auto density = [=](double x) { return std::exp((m1 - 1.0) * std::log(x) - x - log_norm); };
        if (lo == 0.0)
        {
            return 1.0;
        }
        double const mode = m1 - 1.0;
        numeric::Tolerance tol = detail::kernel_tolerance();
        if (lo < mode)
        {
            return numeric::integrate(density, lo, mode, tol) + numeric::integrate(density, mode, INFINITY, tol);
        }
        return numeric::integrate(density, lo, INFINITY, tol);
    };
    double const q = m2 - 1.0 + k;
    auto log_f = [=](double t) {
        if (t <= 0.0)
        {
            return q == 0.0 ? 0.0 : kNegInf;
        }
        double const mass = inner(t);
        if (mass <= 0.0)
        {
            return kNegInf;
        }
        return (q == 0.0 ? 0.0 : q * std::log(t)) - t + std::log(mass);
    };
    return numeric::log_integrate(log_f, 0.0, INFINITY, detail::kernel_tolerance());
}

}  // namespace

void Sigma2Inputs::validate() const
{
    s1.validate();
    s2.validate();
}

double baee2(Sigma2Inputs const& in, LossKind const& kind)
{
    return baee_constant(kind, in.m2()) * in.s2.v;
}

double stein2_s1(Sigma2Inputs const& in, LossKind const& kind)
{
    double const c0 = baee_constant(kind, in.m2());
    double const beta = stein_constant(kind, in.m() + 1);
    return std::max(c0, beta * (1.0 + in.z_star())) * in.s2.v;
}

double stein2_s2(Sigma2Inputs const& in, LossKind const& kind)
{
    double const c0 = baee_constant(kind, in.m2());
    if (!(in.z1_star() > 0.0))
    {
        return c0 * in.s2.v;
    }
    double const beta = stein_constant(kind, in.m2() + 2);
    return std::min(c0, beta * (1.0 + in.s2.scheme.kappa * in.z1_star())) * in.s2.v;
}

double double_shrink2(Sigma2Inputs const& in, LossKind const& kind)
{
    double const v2 = in.s2.v;
    double const phi21 = stein2_s1(in, kind) / v2;
    double const phi22 = stein2_s2(in, kind) / v2;
    return (phi21 + phi22 - baee_constant(kind, in.m2())) * v2;
}

double restricted_mle2(Sigma2Inputs const& in)
{
    return std::max(in.s2.v / (in.m2() + 1.0), (in.s1.v + in.s2.v) / (in.m() + 2.0));
}

double improved_rmle2(Sigma2Inputs const& in, LossKind const& kind)
{
    double const beta = stein_constant(kind, in.m() + 1);
    return std::max(restricted_mle2(in), beta * (1.0 + in.z_star()) * in.s2.v);
}

double kubokawa_phi2(LossKind const& kind, double u2, int m1, int m2)
{
    require_shapes(m1, m2);
    if (!(u2 >= 0.0) || std::isinf(u2))
    {
        throw DomainError("kubokawa_phi2 requires a finite u2 >= 0");
    }
    if (!kind.is_named())
    {
        return kubokawa_phi2_generic(kind, u2, m1, m2);
    }
    double const q = m2;
    // Away from u2 = 0 the substitution x = t u2 y turns each outer integral
    // into a single power-kernel integral over [1, inf), which is two orders
    // of magnitude cheaper than nesting the incomplete gamma function.
    auto outer = [&](double order) {
        if (u2 < kPowerKernelMinU)
        {
            return log_outer(order, m1, u2);
        }
        return m1 * std::log(u2) + numeric::log_gamma(order + m1 + 1.0) - numeric::log_gamma(m1)
               + log_tail_kernel(m1 - 1.0, order + m1 + 1.0, u2);
    };
    switch (kind.family())
    {
    case LossFamily::quadratic:
        return std::exp(outer(q) - outer(q + 1.0));
    case LossFamily::entropy:
        return std::exp(outer(q - 1.0) - outer(q));
    case LossFamily::symmetric:
        return std::sqrt(std::exp(outer(q - 2.0) - outer(q)));
    case LossFamily::custom:
        break;
    }
    throw DomainError("unsupported loss");
}

double maruyama_phi2(LossKind const& kind, double alpha, double u2, int m1, int m2)
{
    require_shapes(m1, m2);
    require_named(kind, "the alpha-family estimator");
    if (!(alpha >= 1.0) || std::isinf(alpha))
    {
        throw DomainError("maruyama_phi2 requires a finite alpha >= 1");
    }
    if (!(u2 > 0.0) || std::isinf(u2))
    {
        throw DomainError("maruyama_phi2 requires a finite u2 > 0: at u2 = 0 the integral over [1, inf) of "
                          "y^p (y u2 + 1)^(-e) diverges because p >= 0 > -1");
    }
    double const m = m1 + m2;
    double const p = alpha * (m1 - 1);
    auto K = [&](double e) { return log_tail_kernel(p, alpha * e, u2); };
    switch (kind.family())
    {
    case LossFamily::quadratic:
        return std::exp(K(m + 1) - K(m + 2)) / (m + 1);
    case LossFamily::entropy:
        return std::exp(K(m) - K(m + 1)) / m;
    case LossFamily::symmetric:
        return std::sqrt(std::exp(K(m - 1) - K(m + 1)) / (m * (m - 1)));
    case LossFamily::custom:
        break;
    }
    throw DomainError("unsupported loss");
}

double gen_bayes2(LossKind const& kind, double v1, double v2, int m1, int m2)
{
    require_shapes(m1, m2);
    require_named(kind, "the generalized Bayes estimator");
    if (!(v1 > 0.0) || !(v2 > 0.0) || std::isinf(v1) || std::isinf(v2))
    {
        throw DomainError("gen_bayes2 requires finite v1, v2 > 0");
    }
    double const u = v1 / v2;
    auto A = [&](double k) { return log_double_integral(k, m1, m2, u); };
    switch (kind.family())
    {
    case LossFamily::quadratic:
        return v2 * std::exp(A(1) - A(2));
    case LossFamily::entropy:
        return v2 * std::exp(A(0) - A(1));
    case LossFamily::symmetric:
        return v2 * std::sqrt(std::exp(A(-1) - A(1)));
    case LossFamily::custom:
        break;
    }
    throw DomainError("unsupported loss");
}

}  // namespace ordscale
