// SPDX-License-Identifier: Apache-2.0
#include "ordscale/censored_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ordscale/errors.hpp"

namespace ordscale {
namespace {

template <class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};

void require_finite(std::vector<double> const& data)
{
    for (double x : data)
    {
        if (!std::isfinite(x))
        {
            throw InputError("data contains a non-finite value");
        }
    }
}

void require_sorted(std::vector<double> const& data, char const* what)
{
    if (!std::is_sorted(data.begin(), data.end()))
    {
        throw InputError(std::string(what) + " must be in ascending order");
    }
}

// v over observed order statistics obs[0] = X(a) .. obs[b-a] = X(b).
double spacing_statistic(std::vector<double> const& obs, int n, int a)
{
    double v = 0.0;
    for (std::size_t i = 1; i < obs.size(); ++i)
    {
        int const j = a + static_cast<int>(i);
        v += static_cast<double>(n - j + 1) * (obs[i] - obs[i - 1]);
    }
    return v;
}

SufficientStats finish(double x_a, double v, CensoringScheme const& scheme)
{
    SufficientStats stats{x_a, v, scheme};
    stats.validate();
    return stats;
}

}  // namespace

void CensoringScheme::validate() const
{
    if (!(1 <= a && a <= b && b <= n))
    {
        throw SchemeError("censoring indices must satisfy 1 <= a <= b <= n (got n=" + std::to_string(n)
                          + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
    if (b - a < 2)
    {
        throw SchemeError("censoring requires b - a >= 2 (got " + std::to_string(b - a) + ")");
    }
    if (!(kappa > 0.0) || !std::isfinite(kappa))
    {
        throw SchemeError("kappa must be positive");
    }
}

CensoringScheme CensoringScheme::doubly_type2(int n, int a, int b)
{
    CensoringScheme s{n, a, b, static_cast<double>(n - a + 1)};
    s.validate();
    return s;
}

void SufficientStats::validate() const
{
    scheme.validate();
    if (!(v > 0.0) || !std::isfinite(v))
    {
        throw InputError("total-time-on-test statistic must be positive (tied observations?)");
    }
    if (!std::isfinite(x_a))
    {
        throw InputError("x_a must be finite");
    }
}

void PopulationParams::validate() const
{
    if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu))
    {
        throw DomainError("population parameters require finite mu and sigma > 0");
    }
}

std::string scheme_name(SchemeDescriptor const& desc)
{
    return std::visit(Overloaded{
                          [](scheme::DoublyTypeII const&) { return std::string("doubly-type2"); },
                          [](scheme::IID const&) { return std::string("iid"); },
                          [](scheme::TypeII const&) { return std::string("type2"); },
                          [](scheme::ProgressiveTypeII const&) { return std::string("progressive"); },
                          [](scheme::Records const&) { return std::string("records"); },
                      },
                      desc);
}

SufficientStats sufficient_stats(std::vector<double> const& sorted_sample, int a, int b)
{
    int const n = static_cast<int>(sorted_sample.size());
    CensoringScheme const scheme = CensoringScheme::doubly_type2(n, a, b);
    require_finite(sorted_sample);
    require_sorted(sorted_sample, "sample");
    std::vector<double> const obs(sorted_sample.begin() + (a - 1), sorted_sample.begin() + b);
    return finish(obs.front(), spacing_statistic(obs, n, a), scheme);
}

SufficientStats simulate_stats(CensoringScheme const& scheme, PopulationParams const& params, Rng& rng)
{
    scheme.validate();
    params.validate();
    double x_a;
    if (scheme.a == 1)
    {
        x_a = params.mu + params.sigma * rng.exponential() / scheme.kappa;
    }
    else
    {
        // Renyi representation of the a-th order statistic.
        double sum = 0.0;
        for (int j = 1; j <= scheme.a; ++j)
        {
            sum += rng.exponential() / static_cast<double>(scheme.n - j + 1);
        }
        x_a = params.mu + params.sigma * sum;
    }
    double const v = rng.gamma(static_cast<double>(scheme.shape()), params.sigma);
    return SufficientStats{x_a, v, scheme};
}

SufficientStats simulate_stats_by_sample(CensoringScheme const& scheme, PopulationParams const& params,
                                         Rng& rng)
{
    scheme.validate();
    params.validate();
    std::vector<double> sample(static_cast<std::size_t>(scheme.n));
    for (double& x : sample)
    {
        x = params.mu + params.sigma * rng.exponential();
    }
    std::sort(sample.begin(), sample.end());
    SufficientStats stats = sufficient_stats(sample, scheme.a, scheme.b);
    stats.scheme = scheme;
    return stats;
}

CensoringScheme effective_scheme(SchemeDescriptor const& desc)
{
    CensoringScheme s = std::visit(
        Overloaded{
            [](scheme::DoublyTypeII const& d) {
                return CensoringScheme{d.n, d.a, d.b, static_cast<double>(d.n - d.a + 1)};
            },
            [](scheme::IID const& d) { return CensoringScheme{d.n, 1, d.n, static_cast<double>(d.n)}; },
            [](scheme::TypeII const& d) {
                if (d.r > d.N)
                {
                    throw SchemeError("type-II censoring requires r <= N");
                }
                return CensoringScheme{d.N, 1, d.r, static_cast<double>(d.N)};
            },
            [](scheme::ProgressiveTypeII const& d) {
                if (d.m < 1 || static_cast<int>(d.removals.size()) != d.m)
                {
                    throw SchemeError("progressive censoring needs one removal count per observed failure");
                }
                long total = d.m;
                for (int r : d.removals)
                {
                    if (r < 0)
                    {
                        throw SchemeError("progressive removal counts must be non-negative");
                    }
                    total += r;
                }
                if (total != d.n)
                {
                    throw SchemeError("progressive censoring requires m + sum(R) = n (got "
                                      + std::to_string(total) + " vs n=" + std::to_string(d.n) + ")");
                }
                return CensoringScheme{d.n, 1, d.m, static_cast<double>(d.n)};
            },
            [](scheme::Records const& d) {
                if (d.k < 3)
                {
                    throw SchemeError("record scheme requires k >= 3");
                }
                return CensoringScheme{d.k, 1, d.k, 1.0};
            },
        },
        desc);
    s.validate();
    return s;
}

SufficientStats scheme_to_stats(SchemeDescriptor const& desc, std::vector<double> const& raw_data)
{
    CensoringScheme const eff = effective_scheme(desc);
    require_finite(raw_data);
    auto require_size = [&](std::size_t expected) {
        if (raw_data.size() != expected)
        {
            throw InputError(scheme_name(desc) + " scheme expects " + std::to_string(expected)
                             + " observations, got " + std::to_string(raw_data.size()));
        }
    };
    return std::visit(
        Overloaded{
            [&](scheme::DoublyTypeII const& d) {
                std::vector<double> data = raw_data;
                if (data.size() == static_cast<std::size_t>(d.n))
                {
                    std::sort(data.begin(), data.end());
                    return sufficient_stats(data, d.a, d.b);
                }
                require_size(static_cast<std::size_t>(d.b - d.a + 1));
                require_sorted(data, "observed order statistics");
                return finish(data.front(), spacing_statistic(data, d.n, d.a), eff);
            },
            [&](scheme::IID const& d) {
                require_size(static_cast<std::size_t>(d.n));
                std::vector<double> data = raw_data;
                std::sort(data.begin(), data.end());
                return finish(data.front(), spacing_statistic(data, d.n, 1), eff);
            },
            [&](scheme::TypeII const& d) {
                require_size(static_cast<std::size_t>(d.r));
                require_sorted(raw_data, "type-II failure times");
                double const sum = std::accumulate(raw_data.begin(), raw_data.end(), 0.0);
                double const v = sum + (d.N - d.r) * raw_data.back() - d.N * raw_data.front();
                return finish(raw_data.front(), v, eff);
            },
            [&](scheme::ProgressiveTypeII const& d) {
                require_size(static_cast<std::size_t>(d.m));
                require_sorted(raw_data, "progressive failure times");
                double v = -static_cast<double>(d.n) * raw_data.front();
                for (int j = 0; j < d.m; ++j)
                {
                    v += (d.removals[static_cast<std::size_t>(j)] + 1.0) * raw_data[static_cast<std::size_t>(j)];
                }
                return finish(raw_data.front(), v, eff);
            },
            [&](scheme::Records const& d) {
                require_size(static_cast<std::size_t>(d.k));
                for (std::size_t i = 1; i < raw_data.size(); ++i)
                {
                    if (!(raw_data[i] > raw_data[i - 1]))
                    {
                        throw InputError("record values must be strictly increasing");
                    }
                }
                return finish(raw_data.front(), raw_data.back() - raw_data.front(), eff);
            },
        },
        desc);
}

std::vector<double> simulate_raw(SchemeDescriptor const& desc, PopulationParams const& params, Rng& rng)
{
    params.validate();
    (void)effective_scheme(desc);
    auto draw = [&] { return params.mu + params.sigma * rng.exponential(); };
    auto sorted_sample = [&](int n) {
        std::vector<double> s(static_cast<std::size_t>(n));
        for (double& x : s)
        {
            x = draw();
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    return std::visit(
        Overloaded{
            [&](scheme::DoublyTypeII const& d) {
                std::vector<double> s = sorted_sample(d.n);
                return std::vector<double>(s.begin() + (d.a - 1), s.begin() + d.b);
            },
            [&](scheme::IID const& d) {
                std::vector<double> s(static_cast<std::size_t>(d.n));
                for (double& x : s)
                {
                    x = draw();
                }
                return s;
            },
            [&](scheme::TypeII const& d) {
                std::vector<double> s = sorted_sample(d.N);
                s.resize(static_cast<std::size_t>(d.r));
                return s;
            },
            [&](scheme::ProgressiveTypeII const& d) {
                // Units on test, kept sorted by lifetime; at each failure the
                // earliest survivor fails and removals[j] survivors chosen
                // uniformly at random are withdrawn.
                std::vector<double> alive = sorted_sample(d.n);
                std::vector<double> observed;
                observed.reserve(static_cast<std::size_t>(d.m));
                for (int j = 0; j < d.m; ++j)
                {
                    observed.push_back(alive.front());
                    alive.erase(alive.begin());
                    for (int r = 0; r < d.removals[static_cast<std::size_t>(j)]; ++r)
                    {
                        auto const idx = rng.below(alive.size());
                        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(idx));
                    }
                }
                return observed;
            },
            [&](scheme::Records const& d) {
                // Scan an i.i.d. stream for upper records. The run of
                // non-records preceding each new record is skipped in one
                // step by drawing the next record from the distribution
                // truncated to exceed the current one (inverse-CDF method).
                std::vector<double> records{draw()};
                while (static_cast<int>(records.size()) < d.k)
                {
                    double const log_tail = -(records.back() - params.mu) / params.sigma;
                    double const u = rng.uniform();
                    records.push_back(params.mu - params.sigma * (log_tail + std::log(u)));
                }
                return records;
            },
        },
        desc);
}

std::vector<double> read_data_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw InputError("cannot open data file '" + path + "'");
    }
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
        {
            continue;
        }
        std::istringstream ls(line);
        double x;
        std::string rest;
        if (!(ls >> x) || (ls >> rest) || !std::isfinite(x))
        {
            throw InputError("'" + path + "' line " + std::to_string(line_no) + ": expected one decimal number");
        }
        values.push_back(x);
    }
    if (values.empty())
    {
        throw InputError("data file '" + path + "' contains no observations");
    }
    return values;
}

}  // namespace ordscale
