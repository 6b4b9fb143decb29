// SPDX-License-Identifier: Apache-2.0
#include "ordscale/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "ordscale/errors.hpp"

namespace ordscale::numeric {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (descending, last is the centre) and weights; every
// second abscissa is shared with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(Segment const& other) const { return error < other.error; }
};

double checked(double y)
{
    if (std::isnan(y))
    {
        throw InputError("integrand returned NaN");
    }
    return y;
}

Segment gauss_kronrod(const RealFunction& f, double lo, double hi)
{
    double const centre = 0.5 * (lo + hi);
    double const half = 0.5 * (hi - lo);
    double const fc = checked(f(centre));
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(kronrod);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j)
    {
        double const dx = half * kXgk[j];
        f1[j] = checked(f(centre - dx));
        f2[j] = checked(f(centre + dx));
        kronrod += kWgk[j] * (f1[j] + f2[j]);
        abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
        {
            gauss += kWg[j / 2] * (f1[j] + f2[j]);
        }
    }
    double const mean = 0.5 * kronrod;
    double asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
    {
        asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }
    double const result = kronrod * half;
    double const result_abs = abs_sum * std::abs(half);
    double const result_asc = asc * std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (result_asc != 0.0 && error != 0.0)
    {
        error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
    }
    if (result_abs > std::numeric_limits<double>::min() / (50.0 * kEps))
    {
        error = std::max(50.0 * kEps * result_abs, error);
    }
    return {lo, hi, result, error};
}

double integrate_finite(const RealFunction& f, double lo, double hi, Tolerance const& tol)
{
    std::priority_queue<Segment> queue;
    Segment first = gauss_kronrod(f, lo, hi);
    double total = first.value;
    double total_err = first.error;
    queue.push(first);

    for (int iter = 0;; ++iter)
    {
        double const target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
        if (total_err <= target)
        {
            return total;
        }
        if (iter >= tol.max_iter)
        {
            throw NumericalError("quadrature did not converge within "
                                 + std::to_string(tol.max_iter)
                                 + " subdivisions (error estimate "
                                 + std::to_string(total_err) + ")");
        }
        Segment worst = queue.top();
        queue.pop();
        double const mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi))
        {
            // Segment at machine resolution: its error is all roundoff.
            if (total_err - worst.error <= target)
            {
                return total;
            }
            throw NumericalError("quadrature reached machine resolution without converging");
        }
        Segment left = gauss_kronrod(f, worst.lo, mid);
        Segment right = gauss_kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
}

}  // namespace

void Tolerance::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1)
    {
        throw DomainError("tolerance requires abs_tol > 0, rel_tol > 0 and max_iter >= 1");
    }
}

double integrate(const RealFunction& f, double lo, double hi, Tolerance tol)
{
    tol.validate();
    if (std::isnan(lo) || std::isnan(hi) || !std::isfinite(lo) || !(lo < hi))
    {
        throw DomainError("integrate requires finite lo < hi (hi may be +inf)");
    }
    if (std::isinf(hi))
    {
        auto mapped = [&f, lo](double u) {
            double const w = 1.0 - u;
            double const y = f(lo + u / w);
            return y == 0.0 ? 0.0 : y / (w * w);
        };
        return integrate_finite(mapped, 0.0, 1.0, tol);
    }
    return integrate_finite(f, lo, hi, tol);
}

double log_integrate(const RealFunction& log_f, double lo, double hi, Tolerance tol)
{
    tol.validate();
    if (!std::isfinite(lo) || !(lo < hi))
    {
        throw DomainError("log_integrate requires finite lo < hi (hi may be +inf)");
    }
    bool const infinite = std::isinf(hi);
    double const a = infinite ? 0.0 : lo;
    double const b = infinite ? 1.0 : hi;
    auto log_g = [&](double x) {
        if (!infinite)
        {
            return log_f(x);
        }
        double const w = 1.0 - x;
        return log_f(lo + x / w) - 2.0 * std::log(w);
    };

    // Locate the peak on a grid, then refine by golden-section search on the
    // neighbouring cells.
    constexpr int kGrid = 64;
    double const h = (b - a) / kGrid;
    double peak = -std::numeric_limits<double>::infinity();
    int best = -1;
    for (int i = 0; i < kGrid; ++i)
    {
        double const v = log_g(a + (i + 0.5) * h);
        if (std::isnan(v))
        {
            throw InputError("log-integrand returned NaN");
        }
        if (v > peak)
        {
            peak = v;
            best = i;
        }
    }
    if (best < 0 || peak == -std::numeric_limits<double>::infinity())
    {
        return -std::numeric_limits<double>::infinity();
    }
    {
        double left = std::max(a, a + (best - 0.5) * h);
        double right = std::min(b, a + (best + 1.5) * h);
        double const ratio = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int i = 0; i < 40 && right - left > 1e-14 * (b - a); ++i)
        {
            double const x1 = right - ratio * (right - left);
            double const x2 = left + ratio * (right - left);
            double const v1 = log_g(x1);
            double const v2 = log_g(x2);
            peak = std::max({peak, v1, v2});
            if (v1 < v2)
            {
                left = x1;
            }
            else
            {
                right = x2;
            }
        }
    }

    Tolerance scaled = tol;
    scaled.abs_tol = std::numeric_limits<double>::min();
    double const value = integrate_finite(
        [&](double x) {
            double const v = log_g(x);
            return v == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(v - peak);
        },
        a, b, scaled);
    if (!(value > 0.0))
    {
        return -std::numeric_limits<double>::infinity();
    }
    return peak + std::log(value);
}

double log_integrate_pieces(const RealFunction& log_f, std::vector<double> const& breakpoints, Tolerance tol)
{
    tol.validate();
    if (breakpoints.size() < 2 || !std::isfinite(breakpoints.front()))
    {
        throw DomainError("log_integrate_pieces needs at least two breakpoints with a finite start");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
    {
        if (!(breakpoints[i] > breakpoints[i - 1]))
        {
            throw DomainError("breakpoints must be strictly ascending");
        }
    }
    double peak = -std::numeric_limits<double>::infinity();
    auto consider = [&](double x) {
        double const v = log_f(x);
        if (std::isnan(v))
        {
            throw InputError("log-integrand returned NaN");
        }
        peak = std::max(peak, v);
    };
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    {
        double const lo = breakpoints[i];
        double const hi = breakpoints[i + 1];
        if (i > 0)
        {
            consider(lo);
        }
        consider(std::isinf(hi) ? lo + 1.0 : 0.5 * (lo + hi));
    }
    if (peak == -std::numeric_limits<double>::infinity())
    {
        return -std::numeric_limits<double>::infinity();
    }
    Tolerance scaled = tol;
    scaled.abs_tol = std::numeric_limits<double>::min();
    auto g = [&](double x) {
        double const v = log_f(x);
        return v == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(v - peak);
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    {
        total += integrate(g, breakpoints[i], breakpoints[i + 1], scaled);
    }
    if (!(total > 0.0))
    {
        return -std::numeric_limits<double>::infinity();
    }
    return peak + std::log(total);
}

double find_root(const RealFunction& f, double lo, double hi, Tolerance tol)
{
    tol.validate();
    double a = lo;
    double b = hi;
    double fa = f(a);
    double fb = f(b);
    if (std::isnan(fa) || std::isnan(fb))
    {
        throw InputError("root function returned NaN at the bracket ends");
    }
    if (fa == 0.0)
    {
        return a;
    }
    if (fb == 0.0)
    {
        return b;
    }
    if ((fa > 0.0) == (fb > 0.0))
    {
        throw NumericalError("root is not bracketed: f(" + std::to_string(lo) + ") and f("
                             + std::to_string(hi) + ") have the same sign");
    }
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < std::max(tol.max_iter, 100); ++iter)
    {
        if ((fb > 0.0) == (fc > 0.0))
        {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb))
        {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        double const tol1 = 2.0 * kEps * std::abs(b)
                            + 0.5 * std::min(tol.abs_tol, tol.rel_tol * std::max(std::abs(b), 1e-300));
        double const half = 0.5 * (c - b);
        if (std::abs(half) <= tol1 || fb == 0.0)
        {
            return b;
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb))
        {
            double p;
            double q;
            double const s = fb / fa;
            if (a == c)
            {
                p = 2.0 * half * s;
                q = 1.0 - s;
            }
            else
            {
                double const qa = fa / fc;
                double const r = fb / fc;
                p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
            {
                q = -q;
            }
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * half * q - std::abs(tol1 * q), std::abs(e * q)))
            {
                e = d;
                d = p / q;
            }
            else
            {
                d = half;
                e = d;
            }
        }
        else
        {
            d = half;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (half > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (std::isnan(fb))
        {
            throw InputError("root function returned NaN");
        }
    }
    throw NumericalError("root finding did not converge");
}

double log_gamma(double x)
{
    if (!(x > 0.0) || std::isinf(x))
    {
        throw DomainError("log_gamma requires a finite x > 0");
    }
    if (x < 0.5)
    {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    constexpr std::array<double, 9> p = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;
    double const z = x - 1.0;
    double sum = p[0];
    for (int i = 1; i < 9; ++i)
    {
        sum += p[i] / (z + i);
    }
    double const t = z + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double upper_reg_gamma(double s, double x)
{
    if (!(s > 0.0) || !(x >= 0.0))
    {
        throw DomainError("upper_reg_gamma requires s > 0 and x >= 0");
    }
    if (x == 0.0)
    {
        return 1.0;
    }
    if (std::isinf(x))
    {
        return 0.0;
    }
    double const log_prefix = s * std::log(x) - x - log_gamma(s);
    constexpr int kMaxIter = 100000;
    if (x < s + 1.0)
    {
        double ap = s;
        double term = 1.0 / s;
        double sum = term;
        for (int i = 0; i < kMaxIter; ++i)
        {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * kEps)
            {
                return std::clamp(1.0 - sum * std::exp(log_prefix), 0.0, 1.0);
            }
        }
        throw NumericalError("incomplete gamma series did not converge");
    }
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i)
    {
        double const an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
        {
            d = kTiny;
        }
        c = b + an / c;
        if (std::abs(c) < kTiny)
        {
            c = kTiny;
        }
        d = 1.0 / d;
        double const delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps)
        {
            return std::clamp(std::exp(log_prefix) * h, 0.0, 1.0);
        }
    }
    throw NumericalError("incomplete gamma continued fraction did not converge");
}

double lower_reg_gamma(double s, double x)
{
    if (!(s > 0.0) || !(x >= 0.0))
    {
        throw DomainError("lower_reg_gamma requires s > 0 and x >= 0");
    }
    if (x == 0.0)
    {
        return 0.0;
    }
    if (x >= s + 1.0)
    {
        return 1.0 - upper_reg_gamma(s, x);
    }
    double ap = s;
    double term = 1.0 / s;
    double sum = term;
    for (int i = 0; i < 100000; ++i)
    {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
        {
            return std::clamp(sum * std::exp(s * std::log(x) - x - log_gamma(s)), 0.0, 1.0);
        }
    }
    throw NumericalError("incomplete gamma series did not converge");
}

}  // namespace ordscale::numeric
