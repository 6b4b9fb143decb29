// SPDX-License-Identifier: Apache-2.0
#include "kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ordscale/errors.hpp"

namespace ordscale::detail {

numeric::Tolerance kernel_tolerance()
{
    numeric::Tolerance tol;
    tol.abs_tol = std::numeric_limits<double>::min();
    tol.rel_tol = 1e-12;
    tol.max_iter = 1000;
    return tol;
}

std::vector<double> breakpoints_around(double peak, double scale, double hi)
{
    std::vector<double> points{0.0, hi};
    if (peak > 0.0 && peak < hi)
    {
        points.push_back(peak);
    }
    if (scale > 0.0 && std::isfinite(scale))
    {
        for (double step = scale; step < 1e300; step *= 4.0)
        {
            bool added = false;
            if (peak - step > 0.0)
            {
                points.push_back(peak - step);
                added = true;
            }
            if (peak + step < hi)
            {
                points.push_back(peak + step);
                added = true;
            }
            if (!added)
            {
                break;
            }
        }
    }
    std::sort(points.begin(), points.end());
    std::vector<double> unique{points.front()};
    for (std::size_t i = 1; i < points.size(); ++i)
    {
        double const prev = unique.back();
        if (points[i] > prev + 1e-13 * std::max(1.0, std::abs(prev)))
        {
            unique.push_back(points[i]);
        }
        else if (std::isinf(points[i]))
        {
            unique.back() = points[i];
        }
    }
    if (unique.size() < 2)
    {
        unique = {0.0, hi};
    }
    return unique;
}

double log_power_kernel(double q, double A, double B, double e)
{
    if (!(q > -1.0) || !(A >= 0.0) || !(B >= 0.0) || !(A + B > 0.0))
    {
        throw DomainError("power kernel requires q > -1 and non-negative, not both zero, A and B");
    }
    if (A == 0.0 && !(q - e > -1.0))
    {
        throw DomainError("power kernel diverges at 0: requires q - e > -1 when A = 0");
    }
    auto log_f = [=](double w) {
        if (w <= 0.0)
        {
            return q == 0.0 ? -e * std::log(A) : (q > 0.0 ? -std::numeric_limits<double>::infinity()
                                                            : std::numeric_limits<double>::infinity());
        }
        return (q == 0.0 ? 0.0 : q * std::log(w)) - e * std::log(A + B * w);
    };
    // Stationary point of q ln w - e ln(A + B w).
    double peak;
    double scale;
    if (B == 0.0 || e <= q)
    {
        peak = 1.0;
        double const slope = q - (A + B > 0.0 ? e * B / (A + B) : 0.0);
        scale = slope > 0.0 ? 1.0 / slope : 1.0;
    }
    else if (q <= 0.0)
    {
        peak = 0.0;
        scale = A > 0.0 ? A / (e * B) : 1.0;
    }
    else
    {
        peak = std::min(1.0, q * A / (B * (e - q)));
        double const denom = A + B * peak;
        double const curvature = q / (peak * peak) - e * B * B / (denom * denom);
        scale = curvature > 0.0 ? 1.0 / std::sqrt(curvature) : 1.0;
    }
    scale = std::min(scale, 1.0);
    auto const points = breakpoints_around(peak, scale, 1.0);
    return numeric::log_integrate_pieces(log_f, points, kernel_tolerance());
}

}  // namespace ordscale::detail
