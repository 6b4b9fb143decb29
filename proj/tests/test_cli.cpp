// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "ordscale/cli.hpp"
#include "ordscale/jute_data.hpp"

namespace {

using namespace ordscale;

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::initializer_list<std::string> args)
{
    std::vector<std::string> storage{"ordscale"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& s : storage)
    {
        argv.push_back(s.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int const code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Value column of the CSV row whose estimator key is `key`.
double csv_value(std::string const& csv, std::string const& key)
{
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line))
    {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ','))
        {
            fields.push_back(f);
        }
        if (fields.size() == 4 && fields[1] == key)
        {
            return std::stod(fields[3]);
        }
    }
    ADD_FAILURE() << "no row for " << key;
    return 0.0;
}

std::vector<std::vector<std::string>> read_csv(std::filesystem::path const& path)
{
    std::ifstream in(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ','))
        {
            fields.push_back(f);
        }
        rows.push_back(fields);
    }
    return rows;
}

std::string slurp(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class TempDir : public ::testing::Test
{
  protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path()
               / ("ordscale_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::filesystem::path dir_;
};

TEST(CliEstimate, BuiltinQuadraticBaee)
{
    auto const r = run({"estimate", "--builtin", "jute", "--a1", "1", "--b1", "30", "--a2", "1", "--b2", "30",
                        "--loss", "quadratic", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(csv_value(r.out, "baee1"), 303.99, 0.005);
    EXPECT_NE(r.err.find("b2 = 30 reduced to 29"), std::string::npos);
}

TEST(CliEstimate, SymmetricStein)
{
    auto const r = run({"estimate", "--builtin", "jute", "--reconstruct-missing", "--a1", "1", "--b1", "30", "--a2",
                        "1", "--b2", "30", "--loss", "symmetric", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(csv_value(r.out, "1S1"), 291.81, 0.005);
}

TEST(CliEstimate, CensoredRestrictedMle)
{
    auto const r = run({"estimate", "--builtin", "jute", "--reconstruct-missing", "--a1", "2", "--b1", "27", "--a2",
                        "3", "--b2", "28", "--loss", "quadratic", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(csv_value(r.out, "rmle1"), 285.16, 0.005);
}

TEST(CliEstimate, TableFormatShowsSymbolsAndStatistics)
{
    auto const r = run({"estimate", "--builtin", "jute", "--reconstruct-missing", "--estimators", "baee,kubokawa"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("δ_01"), std::string::npos);
    EXPECT_NE(r.out.find("kubokawa2"), std::string::npos);
    EXPECT_NE(r.out.find("9119.7"), std::string::npos);
    EXPECT_EQ(r.out.find("1S1"), std::string::npos);
}

TEST(CliEstimate, CsvSchema)
{
    auto const r = run({"estimate", "--builtin", "jute", "--reconstruct-missing", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "target,estimator,symbol,value");
    int rows = 0;
    while (std::getline(lines, line))
    {
        // Symbols containing a comma are quoted; count separators outside quotes.
        int separators = 0;
        bool quoted = false;
        for (char c : line)
        {
            quoted = c == '"' ? !quoted : quoted;
            separators += (!quoted && c == ',') ? 1 : 0;
        }
        EXPECT_EQ(separators, 3) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 19);
}

TEST(CliEstimate, UsageAndSchemeErrors)
{
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"estimate", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({"estimate", "--builtin", "jute", "--a1", "5", "--b1", "6"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"estimate", "--builtin", "jute", "--loss", "absolute"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"estimate", "--data1", "/nonexistent/a.txt", "--data2", "/nonexistent/b.txt"}).code,
              cli::kExitUsage);
    auto const sym = run({"estimate", "--builtin", "jute", "--loss", "symmetric", "--estimators", "strawderman1"});
    EXPECT_EQ(sym.code, cli::kExitUsage);
    EXPECT_NE(sym.err.find("strawderman1"), std::string::npos);
}

TEST_F(TempDir, EstimateFromFilesWarnsOnOrdering)
{
    auto const f1 = dir_ / "one.txt";
    auto const f2 = dir_ / "two.txt";
    std::ofstream(f1) << "5\n1\n3\n8\n2\n";
    std::ofstream(f2) << "1.1\n1.3\n1.2\n1.5\n";
    auto const r = run({"estimate", "--data1", f1.string(), "--data2", f2.string(), "--estimators", "baee"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("sigma1 exceeds"), std::string::npos);
}

TEST_F(TempDir, SimulateDeterministic)
{
    auto const a = dir_ / "a.csv";
    auto const b = dir_ / "b.csv";
    for (auto const& path : {a, b})
    {
        auto const r = run({"simulate", "--preset", "fig1", "--replicates", "1", "--seed", "7", "--out", path.string()});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(TempDir, SimulateBaselineOnly)
{
    auto const out = dir_ / "base.csv";
    auto const r = run({"simulate", "--eta", "1.0", "--estimators", "baee", "--replicates", "500", "--out",
                        out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const rows = read_csv(out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"eta", "estimator", "risk", "stderr", "rri", "improvement"}));
    EXPECT_EQ(rows[1][1], "baee1");
    EXPECT_DOUBLE_EQ(std::stod(rows[1][4]), 0.0);
    EXPECT_NE(r.out.find("min improvement"), std::string::npos);
}

TEST_F(TempDir, SimulatePresetStein1S1Improves)
{
    auto const out = dir_ / "fig1.csv";
    auto const r = run({"simulate", "--preset", "fig1", "--replicates", "50000", "--seed", "42", "--estimators",
                        "1S1", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const rows = read_csv(out);
    ASSERT_EQ(rows.size(), 21u);
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        if (rows[i][1] == "1S1")
        {
            EXPECT_GT(std::stod(rows[i][5]), 0.0) << "eta " << rows[i][0];
        }
    }
}

TEST_F(TempDir, SimulateConfigFileAndErrors)
{
    auto const cfg = dir_ / "sim.cfg";
    std::ofstream(cfg) << "n1=6\nn2=7\neta=0.5,1\nreplicates=200\ntarget=sigma2\nestimators=2S1\n";
    auto const out = dir_ / "cfg.csv";
    auto const r = run({"simulate", "--config", cfg.string(), "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const rows = read_csv(out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[1][1], "baee2");
    EXPECT_EQ(rows[2][1], "2S1");

    EXPECT_EQ(run({"simulate", "--eta", "0.5,0.2", "--out", out.string()}).code, cli::kExitUsage);
    EXPECT_EQ(run({"simulate", "--eta", "0.1:1:0.1"}).code, cli::kExitUsage);  // --out missing
    EXPECT_EQ(run({"simulate", "--preset", "fig42", "--out", out.string()}).code, cli::kExitUsage);
    EXPECT_EQ(run({"simulate", "--replicates", "10", "--out", (dir_ / "missing" / "x.csv").string()}).code,
              cli::kExitUsage);
}

TEST(CliTables, Table3FirstRow)
{
    auto const r = run({"tables", "--which", "3", "--reconstruct-missing"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto const pos = r.out.find("(1,1),(30,30)");
    ASSERT_NE(pos, std::string::npos);
    std::istringstream row(r.out.substr(pos, r.out.find('\n', pos) - pos));
    std::string label;
    row >> label;
    std::vector<double> values;
    double v = 0.0;
    while (row >> v)
    {
        values.push_back(v);
    }
    std::vector<double> const expected{303.99, 279.64, 284.38, 298.01, 303.99, 264.68, 352.90};
    ASSERT_EQ(values.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
    {
        EXPECT_NEAR(values[i], expected[i], 0.02) << i;
    }
}

TEST(CliTables, CompareFlagsDeviationsAndApproximation)
{
    auto const exact = run({"tables", "--which", "6", "--compare", "--reconstruct-missing"});
    ASSERT_EQ(exact.code, 0);
    EXPECT_NE(exact.out.find("225.31"), std::string::npos);
    EXPECT_NE(exact.out.find("deviations > 0.02"), std::string::npos);
    auto const approx = run({"tables", "--which", "6"});
    EXPECT_NE(approx.out.find("approximate"), std::string::npos);
    EXPECT_EQ(run({"tables", "--which", "9"}).code, cli::kExitUsage);
}

TEST_F(TempDir, SchemesIidMatchesEstimate)
{
    auto const iid = run({"schemes", "--scheme", "iid", "--builtin", "jute", "--reconstruct-missing", "--format",
                          "csv"});
    auto const est = run({"estimate", "--builtin", "jute", "--reconstruct-missing", "--format", "csv"});
    ASSERT_EQ(iid.code, 0) << iid.err;
    EXPECT_EQ(iid.out, est.out);
}

TEST_F(TempDir, SchemesRecordsAndProgressive)
{
    auto const r1 = dir_ / "r1.txt";
    auto const r2 = dir_ / "r2.txt";
    std::ofstream(r1) << "1.0\n2.5\n4.0\n";
    std::ofstream(r2) << "0.5\n2.0\n6.5\n7.0\n";
    auto const rec = run({"schemes", "--scheme", "records", "--data1", r1.string(), "--data2", r2.string(),
                          "--estimators", "baee"});
    ASSERT_EQ(rec.code, 0) << rec.err;
    EXPECT_NE(rec.out.find("3.0000"), std::string::npos);

    auto const prog = run({"schemes", "--scheme", "progressive", "--builtin", "jute", "--reconstruct-missing",
                           "--format", "csv"});
    auto const est = run({"estimate", "--builtin", "jute", "--reconstruct-missing", "--format", "csv"});
    ASSERT_EQ(prog.code, 0) << prog.err;
    EXPECT_EQ(prog.out, est.out);

    auto const bad = run({"schemes", "--scheme", "progressive", "--builtin", "jute", "--removals1", "1,2"});
    EXPECT_EQ(bad.code, cli::kExitUsage);
    auto const type2 = run({"schemes", "--scheme", "type2", "--builtin", "jute"});
    EXPECT_EQ(type2.code, cli::kExitUsage);
}

}  // namespace
