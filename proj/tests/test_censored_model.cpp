// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "ordscale/censored_model.hpp"
#include "ordscale/errors.hpp"
#include "ordscale/jute_data.hpp"
#include "ordscale/rng.hpp"
#include "test_support.hpp"

namespace {

using namespace ordscale;

// Direct summation of the normalized spacings, written independently of the
// library routine.
double spacings_oracle(std::vector<double> const& sorted, int a, int b)
{
    int const n = static_cast<int>(sorted.size());
    double v = 0.0;
    for (int j = a + 1; j <= b; ++j)
    {
        v += (n - j + 1) * (sorted[j - 1] - sorted[j - 2]);
    }
    return v;
}

TEST(CensoringScheme, ValidatesRanks)
{
    EXPECT_NO_THROW(CensoringScheme::doubly_type2(10, 1, 10));
    EXPECT_THROW(CensoringScheme::doubly_type2(10, 0, 10), SchemeError);
    EXPECT_THROW(CensoringScheme::doubly_type2(10, 3, 11), SchemeError);
    EXPECT_THROW(CensoringScheme::doubly_type2(10, 5, 6), SchemeError);
    EXPECT_THROW(CensoringScheme::doubly_type2(10, 6, 5), SchemeError);
    auto const s = CensoringScheme::doubly_type2(10, 3, 9);
    EXPECT_EQ(s.shape(), 6);
    EXPECT_DOUBLE_EQ(s.kappa, 8.0);
}

TEST(PopulationParams, RejectsNonPositiveScale)
{
    EXPECT_THROW((PopulationParams{0.0, 0.0}.validate()), DomainError);
    EXPECT_THROW((PopulationParams{0.0, -1.0}.validate()), DomainError);
    EXPECT_NO_THROW((PopulationParams{-3.0, 0.5}.validate()));
}

TEST(SufficientStats, JuteGauge20FullSample)
{
    auto const stats = ordscale::testing::jute_full();
    EXPECT_NEAR(stats.s1.v, 9119.70, 5e-3);
    EXPECT_NEAR(stats.s1.v / 30.0, 303.99, 5e-3);
    EXPECT_DOUBLE_EQ(stats.s1.scheme.kappa, 30.0);
}

TEST(SufficientStats, HandComputedSample)
{
    auto const stats = sufficient_stats({1.0, 2.0, 3.0}, 1, 3);
    EXPECT_DOUBLE_EQ(stats.v, 3.0);
    EXPECT_DOUBLE_EQ(stats.x_a, 1.0);
}

TEST(SufficientStats, ConstantGapMatchesDirectSummation)
{
    std::vector<double> sample;
    for (int i = 0; i < 12; ++i)
    {
        sample.push_back(5.0 + 0.75 * i);
    }
    for (auto [a, b] : {std::pair{1, 3}, std::pair{1, 12}, std::pair{4, 9}, std::pair{2, 12}})
    {
        EXPECT_NEAR(sufficient_stats(sample, a, b).v, spacings_oracle(sample, a, b), 1e-12) << a << ',' << b;
    }
}

TEST(SufficientStats, Errors)
{
    EXPECT_THROW(sufficient_stats({1.0, 3.0, 2.0}, 1, 3), InputError);
    EXPECT_THROW(sufficient_stats({1.0, 2.0, 3.0, 4.0}, 2, 3), SchemeError);
    EXPECT_THROW(sufficient_stats({1.0, 2.0, 3.0}, 1, 4), SchemeError);
    EXPECT_THROW(sufficient_stats({1.0, 1.0, 1.0}, 1, 3), InputError);  // v must be positive
}

TEST(SufficientStats, ScaleEquivarianceAndLocationInvariance)
{
    std::vector<double> sample = jute::gauge20();
    std::sort(sample.begin(), sample.end());
    auto const base = sufficient_stats(sample, 2, 27);
    std::vector<double> shifted = sample;
    std::vector<double> scaled = sample;
    for (auto& x : shifted)
    {
        x += 123.5;
    }
    for (auto& x : scaled)
    {
        x = 2.5 * x + 7.0;
    }
    EXPECT_NEAR(sufficient_stats(shifted, 2, 27).v, base.v, 1e-9 * base.v);
    EXPECT_NEAR(sufficient_stats(scaled, 2, 27).v, 2.5 * base.v, 1e-9 * base.v);
}

TEST(SimulateStats, GammaShapeMean)
{
    auto const scheme = CensoringScheme::doubly_type2(10, 1, 10);
    Rng rng(17);
    constexpr int kReps = 100'000;
    double sum = 0.0;
    for (int i = 0; i < kReps; ++i)
    {
        sum += simulate_stats(scheme, {0.0, 1.0}, rng).v;
    }
    EXPECT_NEAR(sum / kReps, 9.0, 3.0 * std::sqrt(9.0 / kReps));
}

TEST(SimulateStats, ScaleDoublesV)
{
    auto const scheme = CensoringScheme::doubly_type2(10, 2, 9);
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 100; ++i)
    {
        auto const one = simulate_stats(scheme, {0.0, 1.0}, a);
        auto const two = simulate_stats(scheme, {0.0, 2.0}, b);
        EXPECT_NEAR(two.v, 2.0 * one.v, 1e-12 * two.v);
    }
}

TEST(SimulateStats, MinimumAboveLocation)
{
    Rng rng(3);
    for (auto const& scheme : {CensoringScheme::doubly_type2(8, 1, 8), CensoringScheme::doubly_type2(8, 3, 7)})
    {
        for (int i = 0; i < 10000; ++i)
        {
            ASSERT_GE(simulate_stats(scheme, {-4.0, 1.5}, rng).x_a, -4.0);
            ASSERT_GE(simulate_stats_by_sample(scheme, {-4.0, 1.5}, rng).x_a, -4.0);
        }
    }
}

TEST(SimulateStats, DirectPathMatchesSamplePath)
{
    auto const scheme = CensoringScheme::doubly_type2(10, 3, 8);
    constexpr std::size_t kReps = 100'000;
    Rng direct_rng(1);
    Rng sample_rng(2);
    std::vector<double> direct(kReps);
    std::vector<double> sampled(kReps);
    std::vector<double> direct_min(kReps);
    std::vector<double> sampled_min(kReps);
    for (std::size_t i = 0; i < kReps; ++i)
    {
        auto const d = simulate_stats(scheme, {0.0, 1.0}, direct_rng);
        auto const s = simulate_stats_by_sample(scheme, {0.0, 1.0}, sample_rng);
        direct[i] = d.v;
        sampled[i] = s.v;
        direct_min[i] = d.x_a;
        sampled_min[i] = s.x_a;
    }
    auto two_sample_ks = [](std::vector<double> x, std::vector<double> y) {
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        std::size_t i = 0;
        std::size_t j = 0;
        double d = 0.0;
        while (i < x.size() && j < y.size())
        {
            double const t = std::min(x[i], y[j]);
            while (i < x.size() && x[i] <= t)
            {
                ++i;
            }
            while (j < y.size() && y[j] <= t)
            {
                ++j;
            }
            d = std::max(d, std::abs(static_cast<double>(i) / x.size() - static_cast<double>(j) / y.size()));
        }
        return d;
    };
    // Two-sample 1% critical value: 1.6276·sqrt(2/n).
    double const critical = 1.6276 * std::sqrt(2.0 / kReps);
    EXPECT_LT(two_sample_ks(direct, sampled), critical);
    EXPECT_LT(two_sample_ks(direct_min, sampled_min), critical);
}

TEST(EffectiveScheme, Shapes)
{
    auto iid = effective_scheme(scheme::IID{12});
    EXPECT_EQ(iid.shape(), 11);
    EXPECT_DOUBLE_EQ(iid.kappa, 12.0);
    auto t2 = effective_scheme(scheme::TypeII{20, 8});
    EXPECT_EQ(t2.shape(), 7);
    EXPECT_DOUBLE_EQ(t2.kappa, 20.0);
    auto pr = effective_scheme(scheme::ProgressiveTypeII{10, 5, {1, 0, 2, 0, 2}});
    EXPECT_EQ(pr.shape(), 4);
    EXPECT_DOUBLE_EQ(pr.kappa, 10.0);
    auto rec = effective_scheme(scheme::Records{6});
    EXPECT_EQ(rec.shape(), 5);
    EXPECT_DOUBLE_EQ(rec.kappa, 1.0);
}

TEST(EffectiveScheme, InvalidDescriptors)
{
    EXPECT_THROW(effective_scheme(scheme::TypeII{5, 6}), SchemeError);
    EXPECT_THROW(effective_scheme(scheme::Records{2}), SchemeError);
    EXPECT_THROW(effective_scheme(scheme::ProgressiveTypeII{10, 5, {1, 0, 2, 0, 1}}), SchemeError);
    EXPECT_THROW(effective_scheme(scheme::ProgressiveTypeII{10, 5, {1, 0, -1, 0, 5}}), SchemeError);
    EXPECT_THROW(effective_scheme(scheme::ProgressiveTypeII{10, 5, {0, 0}}), SchemeError);
}

TEST(SchemeToStats, IidEqualsFullSample)
{
    auto const a = scheme_to_stats(scheme::IID{3}, {1.0, 2.0, 3.0});
    auto const b = sufficient_stats({1.0, 2.0, 3.0}, 1, 3);
    EXPECT_DOUBLE_EQ(a.v, b.v);
    EXPECT_DOUBLE_EQ(a.x_a, b.x_a);
}

TEST(SchemeToStats, RecordsDifferenceOfExtremes)
{
    auto const s = scheme_to_stats(scheme::Records{3}, {1.0, 2.5, 4.0});
    EXPECT_DOUBLE_EQ(s.v, 3.0);
    EXPECT_EQ(s.scheme.shape(), 2);
    EXPECT_DOUBLE_EQ(s.x_a, 1.0);
    EXPECT_THROW(scheme_to_stats(scheme::Records{3}, {1.0, 4.0, 2.5}), InputError);
}

TEST(SchemeToStats, TypeIIFormula)
{
    std::vector<double> const x{0.5, 1.25, 2.0, 4.5};
    int const N = 9;
    double expected = 0.0;
    for (double v : x)
    {
        expected += v;
    }
    expected += (N - 4) * x.back() - N * x.front();
    auto const s = scheme_to_stats(scheme::TypeII{N, 4}, x);
    EXPECT_NEAR(s.v, expected, 1e-12);
    EXPECT_EQ(s.scheme.shape(), 3);
    EXPECT_THROW(scheme_to_stats(scheme::TypeII{N, 5}, x), InputError);
}

TEST(SchemeToStats, ProgressiveFormula)
{
    std::vector<double> const x{0.5, 1.25, 2.0, 4.5};
    std::vector<int> const r{2, 0, 1, 3};
    int const n = 10;
    double expected = -n * x.front();
    for (std::size_t j = 0; j < x.size(); ++j)
    {
        expected += (r[j] + 1) * x[j];
    }
    auto const s = scheme_to_stats(scheme::ProgressiveTypeII{n, 4, r}, x);
    EXPECT_NEAR(s.v, expected, 1e-12);
    EXPECT_EQ(s.scheme.shape(), 3);
}

TEST(SchemeToStats, ProgressiveWithoutRemovalsCollapsesToIid)
{
    std::vector<double> x = jute::gauge20();
    std::sort(x.begin(), x.end());
    auto const iid = scheme_to_stats(scheme::IID{30}, x);
    auto const prog = scheme_to_stats(scheme::ProgressiveTypeII{30, 30, std::vector<int>(30, 0)}, x);
    EXPECT_NEAR(prog.v, iid.v, 1e-9 * iid.v);
    EXPECT_EQ(prog.scheme.shape(), iid.scheme.shape());
}

TEST(SchemeToStats, DoublyTypeIIObservedPortion)
{
    std::vector<double> x = jute::gauge20();
    std::sort(x.begin(), x.end());
    auto const full = scheme_to_stats(scheme::DoublyTypeII{30, 2, 27}, x);
    std::vector<double> const observed(x.begin() + 1, x.begin() + 27);
    auto const part = scheme_to_stats(scheme::DoublyTypeII{30, 2, 27}, observed);
    EXPECT_NEAR(full.v, part.v, 1e-9 * full.v);
    EXPECT_DOUBLE_EQ(full.x_a, part.x_a);
    EXPECT_THROW(scheme_to_stats(scheme::DoublyTypeII{30, 2, 27}, std::vector<double>(5, 1.0)), InputError);
}

TEST(SimulateRaw, ProgressiveMeanShape)
{
    scheme::ProgressiveTypeII const desc{12, 6, {1, 0, 2, 0, 0, 3}};
    Rng rng(8);
    constexpr int kReps = 100'000;
    double sum = 0.0;
    for (int i = 0; i < kReps; ++i)
    {
        sum += scheme_to_stats(desc, simulate_raw(desc, {0.0, 1.0}, rng)).v;
    }
    EXPECT_NEAR(sum / kReps, 5.0, 3.0 * std::sqrt(5.0 / kReps));
}

TEST(SimulateRaw, AllSchemesGammaDistributed)
{
    constexpr std::size_t kReps = 100'000;
    std::vector<SchemeDescriptor> const descs{scheme::DoublyTypeII{10, 2, 8}, scheme::IID{7}, scheme::TypeII{15, 6},
                                              scheme::ProgressiveTypeII{12, 6, {1, 0, 2, 0, 0, 3}},
                                              scheme::Records{4}};
    std::uint64_t seed = 500;
    for (auto const& desc : descs)
    {
        Rng rng(seed++);
        int const m = effective_scheme(desc).shape();
        std::vector<double> draws(kReps);
        for (auto& v : draws)
        {
            v = scheme_to_stats(desc, simulate_raw(desc, {1.0, 2.0}, rng)).v / 2.0;
        }
        double const d = ordscale::testing::ks_statistic(draws, [m](double x) { return boost::math::gamma_p(m, x); });
        EXPECT_LT(d, ordscale::testing::ks_critical_1pct(kReps)) << scheme_name(desc);
    }
}

TEST(ReadDataFile, ParsesCommentsAndRejectsGarbage)
{
    auto const dir = std::filesystem::temp_directory_path();
    auto const good = dir / "ordscale_read_good.txt";
    auto const bad = dir / "ordscale_read_bad.txt";
    {
        std::ofstream(good) << "# header\n3.5\n\n  1.25\n2e1\n";
        std::ofstream(bad) << "1.0\nabc\n";
    }
    auto const values = read_data_file(good.string());
    ASSERT_EQ(values.size(), 3u);
    EXPECT_DOUBLE_EQ(values[0], 3.5);
    EXPECT_DOUBLE_EQ(values[2], 20.0);
    EXPECT_THROW(read_data_file(bad.string()), InputError);
    EXPECT_THROW(read_data_file((dir / "ordscale_missing_file.txt").string()), InputError);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST(JuteData, Sizes)
{
    EXPECT_EQ(jute::gauge20().size(), 30u);
    EXPECT_EQ(jute::gauge5(false).size(), 29u);
    auto const full = jute::gauge5(true);
    ASSERT_EQ(full.size(), 30u);
    EXPECT_DOUBLE_EQ(full.back(), jute::kReconstructedGauge5);
}

}  // namespace
