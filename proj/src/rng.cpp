// SPDX-License-Identifier: Apache-2.0
#include "ordscale/rng.hpp"

#include <cmath>

#include "ordscale/errors.hpp"

namespace ordscale {
namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed)
    : engine_(splitmix64(seed))
{
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    std::uint64_t const h = splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xd1342543de82ef95ULL));
    return Rng(h);
}

double Rng::uniform()
{
    // 53 random bits shifted half a step off zero: strictly inside (0, 1).
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal()
{
    // Marsaglia polar method; the second deviate is discarded to keep the
    // stream stateless beyond the engine itself.
    for (;;)
    {
        double const u = 2.0 * uniform() - 1.0;
        double const v = 2.0 * uniform() - 1.0;
        double const s = u * u + v * v;
        if (s > 0.0 && s < 1.0)
        {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double Rng::exponential()
{
    return -std::log(uniform());
}

double Rng::gamma(double shape, double scale)
{
    if (!(shape > 0.0) || !(scale > 0.0))
    {
        throw DomainError("gamma variate requires shape > 0 and scale > 0");
    }
    if (shape < 1.0)
    {
        // Gamma(k) = Gamma(k + 1) * U^(1/k).
        double const u = uniform();
        return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia & Tsang squeeze method.
    double const d = shape - 1.0 / 3.0;
    double const c = 1.0 / std::sqrt(9.0 * d);
    for (;;)
    {
        double x;
        double v;
        do
        {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double const u = uniform();
        double const x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
        {
            return d * v * scale;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
        {
            return d * v * scale;
        }
    }
}

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0)
    {
        throw DomainError("below() requires n > 0");
    }
    // Rejection to avoid modulo bias.
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;)
    {
        std::uint64_t const x = engine_();
        if (x < limit)
        {
            return x % n;
        }
    }
}

}  // namespace ordscale
