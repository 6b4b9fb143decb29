// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordscale/errors.hpp"
#include "ordscale/estimators.hpp"
#include "ordscale/risk_sim.hpp"
#include "ordscale/rng.hpp"

namespace {

using namespace ordscale;

SimConfig small_config(long replicates = 4000)
{
    SimConfig config;
    config.replicates = replicates;
    config.eta_grid = {0.2, 0.6, 1.0};
    config.estimators = {EstimatorId::stein1_s1, EstimatorId::kubokawa1};
    config.threads = 1;
    return config;
}

std::string read_file(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(EstimateRisk, BaeeQuadraticRiskClosedForm)
{
    SimConfig config = small_config(20000);
    for (double eta : config.eta_grid)
    {
        auto const row = estimate_risk(config, EstimatorId::baee1, eta);
        double const m1 = config.scheme1.shape();
        EXPECT_NEAR(row.risk, 1.0 / (m1 + 1.0), 3.0 * row.std_error) << eta;
        EXPECT_DOUBLE_EQ(row.rri, 0.0);
    }
}

TEST(EstimateRisk, SingleReplicateIsThatDrawsLoss)
{
    SimConfig config = small_config(1);
    config.seed = 7;
    std::size_t const eta_index = 1;
    double const eta = config.eta_grid[eta_index];
    auto const row = estimate_risk(config, EstimatorId::stein1_s1, eta);

    Rng rng = Rng::derive(config.seed, eta_index, 0);
    auto const s1 = simulate_stats(config.scheme1, {config.mu1, eta * config.sigma2}, rng);
    auto const s2 = simulate_stats(config.scheme2, {config.mu2, config.sigma2}, rng);
    double const expected =
        config.options.loss.value(evaluate(EstimatorId::stein1_s1, s1, s2, config.options) / (eta * config.sigma2));
    EXPECT_DOUBLE_EQ(row.risk, expected);
    EXPECT_DOUBLE_EQ(row.std_error, 0.0);
}

TEST(EstimateRisk, ScaleInvariance)
{
    SimConfig a = small_config(2000);
    SimConfig b = a;
    b.sigma2 = 7.0;
    for (double eta : a.eta_grid)
    {
        auto const ra = estimate_risk(a, EstimatorId::kubokawa1, eta);
        auto const rb = estimate_risk(b, EstimatorId::kubokawa1, eta);
        EXPECT_NEAR(ra.risk, rb.risk, 1e-9 * ra.risk) << eta;
    }
}

TEST(EstimateRisk, Errors)
{
    SimConfig config = small_config(10);
    EXPECT_THROW(estimate_risk(config, EstimatorId::baee1, 0.5), ConfigError);
    EXPECT_THROW(estimate_risk(config, EstimatorId::baee2, 0.2), ConfigError);
    config.target = Target::sigma2;
    config.estimators = {EstimatorId::strawderman1};
    EXPECT_THROW(rri_curve(config), ConfigError);
    config = small_config(10);
    config.options.loss = LossKind::symmetric();
    config.estimators = {EstimatorId::strawderman1};
    EXPECT_THROW(rri_curve(config), ConfigError);
    config = small_config(10);
    config.eta_grid = {0.5, 0.4};
    EXPECT_THROW(rri_curve(config), ConfigError);
    config.eta_grid = {0.5, 1.2};
    EXPECT_THROW(rri_curve(config), ConfigError);
    config.eta_grid = {0.5};
    config.replicates = 0;
    EXPECT_THROW(rri_curve(config), ConfigError);
}

TEST(RriCurve, LayoutBaselineAndCommonRandomNumbers)
{
    SimConfig const config = small_config(3000);
    auto const table = rri_curve(config);
    ASSERT_EQ(table.rows.size(), 9u);
    for (std::size_t e = 0; e < 3; ++e)
    {
        auto const& base = table.rows[3 * e];
        EXPECT_EQ(base.estimator, EstimatorId::baee1);
        EXPECT_DOUBLE_EQ(base.eta, config.eta_grid[e]);
        EXPECT_DOUBLE_EQ(base.rri, 0.0);
        for (std::size_t j = 1; j < 3; ++j)
        {
            auto const& row = table.rows[3 * e + j];
            EXPECT_DOUBLE_EQ(row.eta, config.eta_grid[e]);
            EXPECT_EQ(row.input_hash, base.input_hash) << "estimators saw different samples";
            EXPECT_DOUBLE_EQ(row.improvement, -row.rri);
            EXPECT_NEAR(row.rri, 100.0 * (row.risk - base.risk) / base.risk, 1e-9);
            EXPECT_GE(row.std_error, 0.0);
        }
    }
    EXPECT_NE(table.rows[0].input_hash, table.rows[3].input_hash);
}

TEST(RriCurve, Stein1S1DominatesAtPreset)
{
    SimConfig config = preset_config("fig1", 1);
    config.replicates = 20000;
    config.estimators = {EstimatorId::stein1_s1};
    config.threads = 1;
    auto const table = rri_curve(config);
    for (std::size_t i = 0; i < table.rows.size(); i += 2)
    {
        auto const& base = table.rows[i];
        auto const& row = table.rows[i + 1];
        double const band = 2.0 * std::hypot(row.std_error, base.std_error);
        EXPECT_LE(row.risk, base.risk + band) << row.eta;
    }
}

TEST(RriCurve, IndependentOfThreadCount)
{
    SimConfig one = small_config(5500);
    SimConfig four = one;
    four.threads = 4;
    std::ostringstream a;
    std::ostringstream b;
    write_csv(rri_curve(one), a);
    write_csv(rri_curve(four), b);
    EXPECT_EQ(a.str(), b.str());
}

TEST(RriCurve, SamplePathAgreesWithDirectPath)
{
    SimConfig direct = small_config(20000);
    direct.estimators = {};
    SimConfig sampled = direct;
    sampled.sample_path = true;
    auto const a = rri_curve(direct);
    auto const b = rri_curve(sampled);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
    {
        double const band = 3.0 * std::hypot(a.rows[i].std_error, b.rows[i].std_error);
        EXPECT_NEAR(a.rows[i].risk, b.rows[i].risk, band);
    }
}

TEST(WriteCsv, EmptyTableAndRowOrder)
{
    std::ostringstream empty;
    write_csv(RiskTable{}, empty);
    EXPECT_EQ(empty.str(), "eta,estimator,risk,stderr,rri,improvement\n");

    SimConfig config = small_config(50);
    config.estimators = {EstimatorId::stein1_s1};
    auto const table = rri_curve(config);
    std::ostringstream out;
    write_csv(table, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    std::vector<std::string> keys;
    std::vector<std::string> etas;
    while (std::getline(lines, line))
    {
        etas.push_back(line.substr(0, line.find(',')));
        auto const rest = line.substr(line.find(',') + 1);
        keys.push_back(rest.substr(0, rest.find(',')));
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"baee1", "1S1", "baee1", "1S1", "baee1", "1S1"}));
    EXPECT_EQ(etas, (std::vector<std::string>{"0.2", "0.2", "0.6", "0.6", "1", "1"}));
}

TEST(WriteCsv, ByteIdenticalAcrossRunsAndIoErrors)
{
    auto const dir = std::filesystem::temp_directory_path();
    auto const first = dir / "ordscale_risk_a.csv";
    auto const second = dir / "ordscale_risk_b.csv";
    SimConfig const config = small_config(1500);
    write_csv(rri_curve(config), first.string());
    write_csv(rri_curve(config), second.string());
    EXPECT_EQ(read_file(first), read_file(second));
    std::filesystem::remove(first);
    std::filesystem::remove(second);
    EXPECT_THROW(write_csv(RiskTable{}, (dir / "no_such_dir" / "x.csv").string()), IoError);
}

TEST(ParseEtaGrid, ListsAndRanges)
{
    EXPECT_EQ(parse_eta_grid("0.1:1:0.1"),
              (std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}));
    EXPECT_EQ(parse_eta_grid("0.25, 0.5,1"), (std::vector<double>{0.25, 0.5, 1.0}));
    EXPECT_THROW(parse_eta_grid("0.1:abc:0.1"), ConfigError);
    EXPECT_THROW(parse_eta_grid(""), ConfigError);
    EXPECT_THROW(parse_eta_grid("1:0.1:0.1"), ConfigError);
}

TEST(ParseConfig, KeysAndErrors)
{
    std::istringstream in("# comment\nn1 = 12\nb1 = 10\nn2=9\nmu1=0.2\neta=0.5,1\nreplicates=300\nseed=9\n"
                          "loss=entropy\ntarget=sigma2\nestimators=2S1,kubokawa\nthreads=2\n");
    SimConfig const config = parse_config(in);
    EXPECT_EQ(config.scheme1.n, 12);
    EXPECT_EQ(config.scheme1.b, 10);
    EXPECT_EQ(config.scheme2.n, 9);
    EXPECT_EQ(config.scheme2.b, 9);
    EXPECT_DOUBLE_EQ(config.mu1, 0.2);
    EXPECT_EQ(config.eta_grid, (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(config.replicates, 300);
    EXPECT_EQ(config.seed, 9u);
    EXPECT_EQ(config.options.loss.family(), LossFamily::entropy);
    EXPECT_EQ(config.target, Target::sigma2);
    EXPECT_EQ(config.estimators, (std::vector<EstimatorId>{EstimatorId::stein2_s1, EstimatorId::kubokawa2}));
    EXPECT_EQ(config.threads, 2);

    std::istringstream unknown("colour=blue\n");
    EXPECT_THROW(parse_config(unknown), ConfigError);
    std::istringstream malformed("n1 12\n");
    EXPECT_THROW(parse_config(malformed), ConfigError);
    std::istringstream bad_number("replicates=many\n");
    EXPECT_THROW(parse_config(bad_number), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/ordscale.cfg"), IoError);
}

TEST(Presets, Catalogue)
{
    auto const names = preset_names();
    EXPECT_EQ(names.size(), 14u);
    SimConfig const fig1 = preset_config("fig1");
    EXPECT_EQ(fig1.scheme1.n, 8);
    EXPECT_EQ(fig1.scheme2.n, 10);
    EXPECT_EQ(fig1.scheme1.a, 1);
    EXPECT_EQ(fig1.scheme2.b, 10);
    EXPECT_EQ(fig1.replicates, 50000);
    EXPECT_EQ(fig1.target, Target::sigma1);
    EXPECT_FALSE(fig1.estimators.empty());
    for (auto const& name : names)
    {
        for (int panel = 1; panel <= preset_panels(name); ++panel)
        {
            EXPECT_NO_THROW(preset_config(name, panel).validate()) << name << panel;
        }
        EXPECT_THROW(preset_config(name, preset_panels(name) + 1), ConfigError);
    }
    EXPECT_EQ(preset_config("fig8").target, Target::sigma2);
    EXPECT_THROW(preset_config("fig99"), ConfigError);
}

TEST(Threads, EnvironmentCap)
{
    ::setenv("ORDSCALE_THREADS", "2", 1);
    EXPECT_EQ(resolve_threads(8), 2);
    EXPECT_EQ(resolve_threads(1), 1);
    ::unsetenv("ORDSCALE_THREADS");
    EXPECT_EQ(resolve_threads(3), 3);
    EXPECT_GE(resolve_threads(0), 1);
}

}  // namespace
