// SPDX-License-Identifier: Apache-2.0
#include "ordscale/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ordscale/censored_model.hpp"
#include "ordscale/errors.hpp"
#include "ordscale/estimators.hpp"
#include "ordscale/jute_data.hpp"
#include "ordscale/risk_sim.hpp"
#include "ordscale/sigma1.hpp"

namespace ordscale::cli {
namespace {

std::string format(char const* fmt, double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, fmt, value);
    return buffer;
}

// Quotes a CSV field that contains a separator or a quote character.
std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"") == std::string_view::npos)
    {
        return std::string(text);
    }
    std::string quoted = "\"";
    for (char c : text)
    {
        quoted += c;
        if (c == '"')
        {
            quoted += '"';
        }
    }
    return quoted + '"';
}

std::string pad(std::string const& text, std::size_t width)
{
    // Count UTF-8 code points so that symbols such as "δ" align.
    std::size_t length = 0;
    for (unsigned char c : text)
    {
        if ((c & 0xC0) != 0x80)
        {
            ++length;
        }
    }
    return length >= width ? text + " " : text + std::string(width - length, ' ');
}

struct DataFlags
{
    std::string data1;
    std::string data2;
    std::string builtin;
    bool reconstruct = false;
};

struct EstimatorFlags
{
    std::string loss = "quadratic";
    std::string estimators = "all";
    double alpha = 1.5;
    double epsilon = 1.0;
    std::string format = "table";
};

void add_data_flags(CLI::App* app, DataFlags& flags)
{
    app->add_option("--data1", flags.data1, "Observations of population 1 (one per line)");
    app->add_option("--data2", flags.data2, "Observations of population 2 (one per line)");
    app->add_option("--builtin", flags.builtin, "Embedded dataset instead of files")->check(CLI::IsMember({"jute"}));
    app->add_flag("--reconstruct-missing", flags.reconstruct,
                  "Append the reconstructed 30th gauge-5 observation to the jute data");
}

void add_estimator_flags(CLI::App* app, EstimatorFlags& flags)
{
    app->add_option("--loss", flags.loss, "quadratic, entropy or symmetric")->capture_default_str();
    app->add_option("--estimators", flags.estimators, "Comma-separated estimator keys or 'all'")
        ->capture_default_str();
    app->add_option("--alpha", flags.alpha, "Exponent scale of the alpha-family estimators")->capture_default_str();
    app->add_option("--epsilon", flags.epsilon, "Shrinkage exponent of the Strawderman-type estimator")
        ->capture_default_str();
    app->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
}

struct Samples
{
    std::vector<double> x1;
    std::vector<double> x2;
    bool builtin_printed_only = false;
};

Samples load_samples(DataFlags const& flags)
{
    Samples s;
    if (!flags.builtin.empty())
    {
        if (!flags.data1.empty() || !flags.data2.empty())
        {
            throw InputError("use either --builtin or --data1/--data2, not both");
        }
        s.x1 = jute::gauge20();
        s.x2 = jute::gauge5(flags.reconstruct);
        s.builtin_printed_only = !flags.reconstruct;
    }
    else
    {
        if (flags.data1.empty() || flags.data2.empty())
        {
            throw InputError("both --data1 and --data2 are required (or --builtin jute)");
        }
        if (flags.reconstruct)
        {
            throw InputError("--reconstruct-missing only applies to --builtin jute");
        }
        s.x1 = read_data_file(flags.data1);
        s.x2 = read_data_file(flags.data2);
    }
    return s;
}

// Estimator keys for both targets; target-free aliases expand to both.
std::vector<EstimatorId> estimator_selection(std::string const& text, EstimatorOptions const& options)
{
    std::vector<EstimatorId> ids;
    auto add = [&](EstimatorId id) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
        {
            ids.push_back(id);
        }
    };
    std::string trimmed = text;
    trimmed.erase(std::remove(trimmed.begin(), trimmed.end(), ' '), trimmed.end());
    if (trimmed == "all")
    {
        for (auto const& info : all_estimators())
        {
            if (is_applicable(info.id, options))
            {
                add(info.id);
            }
        }
        return ids;
    }
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item.empty())
        {
            continue;
        }
        bool found = false;
        for (Target t : {Target::sigma1, Target::sigma2})
        {
            try
            {
                add(parse_estimator(item, t));
                found = true;
            }
            catch (InputError const&)
            {
            }
        }
        if (!found)
        {
            throw InputError("unknown estimator '" + item + "'");
        }
    }
    if (ids.empty())
    {
        throw InputError("no estimators selected");
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

void print_stats(std::ostream& out, SufficientStats const& s1, SufficientStats const& s2, double min1, double min2,
                 EstimatorFlags const& flags)
{
    if (flags.format == "csv")
    {
        return;
    }
    out << "population  n    a    b    m    kappa      x_a          v            mu_hat\n";
    int index = 1;
    for (auto const* s : {&s1, &s2})
    {
        char line[256];
        std::snprintf(line, sizeof line, "%-11d %-4d %-4d %-4d %-4d %-10.6g %-12.4f %-12.4f %.4f\n", index,
                      s->scheme.n, s->scheme.a, s->scheme.b, s->scheme.shape(), s->scheme.kappa, s->x_a, s->v,
                      index == 1 ? min1 : min2);
        out << line;
        ++index;
    }
    out << '\n';
}

void print_estimates(std::ostream& out, std::ostream& err, SufficientStats const& s1, SufficientStats const& s2,
                     EstimatorFlags const& flags)
{
    EstimatorOptions options;
    options.loss = parse_loss(flags.loss);
    options.alpha = flags.alpha;
    options.epsilon = flags.epsilon;
    std::vector<EstimatorId> const ids = estimator_selection(flags.estimators, options);

    bool const csv = flags.format == "csv";
    if (csv)
    {
        out << "target,estimator,symbol,value\n";
    }
    else
    {
        out << "loss: " << options.loss.name() << "\n";
        out << pad("target", 8) << pad("estimator", 16) << pad("symbol", 12) << "value\n";
    }
    double baee1_value = std::numeric_limits<double>::quiet_NaN();
    double baee2_value = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::string> notes;
    for (EstimatorId id : ids)
    {
        auto const& info = estimator_info(id);
        if (!is_applicable(id, options))
        {
            throw DomainError("estimator " + std::string(info.key) + " is not defined for the " + options.loss.name()
                              + " loss");
        }
        double const value = evaluate(id, s1, s2, options);
        if (id == EstimatorId::baee1)
        {
            baee1_value = value;
        }
        if (id == EstimatorId::baee2)
        {
            baee2_value = value;
        }
        if (id == EstimatorId::strawderman1)
        {
            auto const result = strawderman1(Sigma1Inputs{s1, s2}, StrawdermanParams{options.epsilon, options.loss});
            if (!result.improvement_available)
            {
                notes.push_back("strawderman1: no improvement available for this configuration (equals baee1)");
            }
        }
        if (csv)
        {
            char line[256];
            std::snprintf(line, sizeof line, "%s,%s,%s,%.10g\n", std::string(target_name(info.target)).c_str(),
                          std::string(info.key).c_str(), csv_field(info.symbol).c_str(), value);
            out << line;
        }
        else
        {
            out << pad(std::string(target_name(info.target)), 8) << pad(std::string(info.key), 16)
                << pad(std::string(info.symbol), 12) << format("%.4f", value) << '\n';
        }
    }
    for (auto const& note : notes)
    {
        (csv ? err : out) << "note: " << note << '\n';
    }
    if (baee1_value > baee2_value)
    {
        err << "warning: estimated sigma1 exceeds estimated sigma2 (ordering is not enforced on data)\n";
    }
}

CensoringScheme clamp_indices(int n, int a, int b, bool allow_clamp, char which, std::ostream& err)
{
    if (b == 0)
    {
        b = n;
    }
    if (allow_clamp && b > n)
    {
        err << "warning: b" << which << " = " << b << " reduced to " << n
            << " (only the printed observations are available; pass --reconstruct-missing); "
               "results are approximate\n";
        b = n;
    }
    return CensoringScheme::doubly_type2(n, a, b);
}

// ---------------------------------------------------------------- estimate

struct EstimateCommand
{
    DataFlags data;
    EstimatorFlags est;
    int a1 = 1;
    int a2 = 1;
    int b1 = 0;
    int b2 = 0;

    void run(std::ostream& out, std::ostream& err) const
    {
        Samples s = load_samples(data);
        std::sort(s.x1.begin(), s.x1.end());
        std::sort(s.x2.begin(), s.x2.end());
        CensoringScheme const c1 = clamp_indices(static_cast<int>(s.x1.size()), a1, b1, false, '1', err);
        CensoringScheme const c2 =
            clamp_indices(static_cast<int>(s.x2.size()), a2, b2, s.builtin_printed_only, '2', err);
        SufficientStats const s1 = sufficient_stats(s.x1, c1.a, c1.b);
        SufficientStats const s2 = sufficient_stats(s.x2, c2.a, c2.b);
        print_stats(out, s1, s2, s.x1.front(), s.x2.front(), est);
        print_estimates(out, err, s1, s2, est);
    }
};

// ---------------------------------------------------------------- simulate

struct SimulateCommand
{
    std::string preset;
    int panel = 1;
    std::string config_path;
    std::string out_path;
    int n1 = 0, a1 = 0, b1 = 0, n2 = 0, a2 = 0, b2 = 0;
    double mu1 = 0.0, mu2 = 0.0, sigma2 = 1.0, alpha = 1.5, epsilon = 1.0;
    std::string eta;
    long replicates = 50000;
    std::uint64_t seed = 42;
    std::string loss;
    std::string target;
    std::string estimators;
    int threads = 0;
    bool sample_path = false;

    CLI::App* app = nullptr;

    bool given(char const* name) const { return app->count(name) > 0; }

    void run(std::ostream& out, std::ostream& err) const
    {
        SimConfig config;
        if (!preset.empty())
        {
            config = preset_config(preset, panel);
        }
        else if (given("--panel"))
        {
            throw ConfigError("--panel requires --preset");
        }
        if (!config_path.empty())
        {
            if (!preset.empty())
            {
                throw ConfigError("use either --preset or --config, not both");
            }
            config = load_config(config_path);
        }
        auto scheme = [&](CensoringScheme const& base, int n, int a, int b, char const* nf, char const* af,
                          char const* bf) {
            int const nn = given(nf) ? n : base.n;
            int const aa = given(af) ? a : base.a;
            int const bb = given(bf) ? b : (given(nf) ? nn : base.b);
            try
            {
                return CensoringScheme::doubly_type2(nn, aa, bb);
            }
            catch (SchemeError const& e)
            {
                throw ConfigError(e.what());
            }
        };
        config.scheme1 = scheme(config.scheme1, n1, a1, b1, "--n1", "--a1", "--b1");
        config.scheme2 = scheme(config.scheme2, n2, a2, b2, "--n2", "--a2", "--b2");
        if (given("--mu1"))
        {
            config.mu1 = mu1;
        }
        if (given("--mu2"))
        {
            config.mu2 = mu2;
        }
        if (given("--sigma2"))
        {
            config.sigma2 = sigma2;
        }
        if (given("--eta"))
        {
            config.eta_grid = parse_eta_grid(eta);
        }
        if (given("--replicates"))
        {
            config.replicates = replicates;
        }
        if (given("--seed"))
        {
            config.seed = seed;
        }
        if (given("--loss"))
        {
            config.options.loss = parse_loss(loss);
        }
        bool const target_changed = given("--target") && parse_target(target) != config.target;
        if (given("--target"))
        {
            config.target = parse_target(target);
        }
        if (given("--estimators"))
        {
            config.estimators = parse_estimator_list(estimators, config.target);
        }
        else if (target_changed || config.estimators.empty())
        {
            config.estimators = parse_estimator_list(
                config.target == Target::sigma1 ? "baee1,1S1,1S2,1S3,rmle1,kubokawa1" : "baee2,2S1,2S2,2S3,rmle2,kubokawa2",
                config.target);
        }
        if (given("--alpha"))
        {
            config.options.alpha = alpha;
        }
        if (given("--epsilon"))
        {
            config.options.epsilon = epsilon;
        }
        if (given("--threads"))
        {
            config.threads = threads;
        }
        if (sample_path)
        {
            config.sample_path = true;
        }
        config.validate();

        RiskTable const table = rri_curve(config);
        write_csv(table, out_path);

        out << "wrote " << table.rows.size() << " rows to " << out_path << " (" << config.replicates
            << " replicates, seed " << config.seed << ", " << config.options.loss.name() << " loss, "
            << target_name(config.target) << ")\n";
        out << pad("estimator", 16) << pad("min improvement %", 20) << "max improvement %\n";
        std::vector<EstimatorId> order;
        for (auto const& row : table.rows)
        {
            if (std::find(order.begin(), order.end(), row.estimator) == order.end())
            {
                order.push_back(row.estimator);
            }
        }
        for (EstimatorId id : order)
        {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            for (auto const& row : table.rows)
            {
                if (row.estimator == id)
                {
                    lo = std::min(lo, row.improvement);
                    hi = std::max(hi, row.improvement);
                }
            }
            out << pad(std::string(estimator_info(id).key), 16) << pad(format("%.3f", lo), 20) << format("%.3f", hi)
                << '\n';
        }
        (void)err;
    }
};

// ---------------------------------------------------------------- tables

struct TablesCommand
{
    std::string which = "all";
    bool compare = false;
    bool reconstruct = false;
    double alpha = 1.5;

    void run(std::ostream& out, std::ostream& err) const
    {
        std::vector<int> tables;
        if (which == "all")
        {
            tables = {3, 4, 5, 6, 7, 8};
        }
        else
        {
            int t = 0;
            try
            {
                t = std::stoi(which);
            }
            catch (std::exception const&)
            {
                throw InputError("--which expects 3..8 or all");
            }
            tables = {t};
        }
        constexpr double kTolerance = 0.02;
        int deviations = 0;
        int entries = 0;
        for (int t : tables)
        {
            jute::ComputedTable const computed = jute::compute_table(t, reconstruct, alpha);
            Target const target = jute::table_target(t);
            auto const& columns = jute::table_columns(target);
            out << "Table " << t << ": estimates of " << (target == Target::sigma1 ? "sigma_1" : "sigma_2")
                << " under " << jute::table_loss(t).name() << " loss";
            if (!reconstruct)
            {
                out << " (29 printed gauge-5 values; approximate)";
            }
            out << '\n';
            out << pad("(a1,a2),(b1,b2)", 18);
            for (EstimatorId id : columns)
            {
                out << pad(std::string(estimator_info(id).key), 16);
            }
            out << '\n';
            for (std::size_t r = 0; r < 4; ++r)
            {
                auto const& row = jute::table_rows()[r];
                std::string const label = "(" + std::to_string(row.a1) + "," + std::to_string(row.a2) + "),("
                                          + std::to_string(row.b1) + "," + std::to_string(row.b2) + ")"
                                          + (computed.clamped[r] ? "~" : "");
                out << pad(label, 18);
                for (double v : computed.values[r])
                {
                    out << pad(format("%.2f", v), 16);
                }
                out << '\n';
                if (compare)
                {
                    auto const& ref = jute::reference_table(t)[r];
                    out << pad("  reference", 18);
                    for (double v : ref)
                    {
                        out << pad(format("%.2f", v), 16);
                    }
                    out << '\n' << pad("  difference", 18);
                    for (std::size_t c = 0; c < ref.size(); ++c)
                    {
                        double const d = computed.values[r][c] - ref[c];
                        bool const flagged = std::abs(d) > kTolerance + 1e-9;
                        deviations += flagged ? 1 : 0;
                        ++entries;
                        out << pad(format("%+.2f", d) + (flagged ? " *" : ""), 16);
                    }
                    out << '\n';
                }
            }
            out << '\n';
        }
        if (compare)
        {
            out << "deviations > " << format("%.2f", kTolerance) << ": " << deviations << " of " << entries
                << " entries" << (reconstruct ? "" : " (approximate: reconstruction disabled)") << '\n';
        }
        (void)err;
    }
};

// ---------------------------------------------------------------- schemes

struct SchemesCommand
{
    std::string scheme;
    DataFlags data;
    EstimatorFlags est;
    int units1 = 0;
    int units2 = 0;
    std::string removals1;
    std::string removals2;

    static std::vector<int> parse_removals(std::string const& text, std::size_t m)
    {
        if (text.empty())
        {
            return std::vector<int>(m, 0);
        }
        std::vector<int> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            try
            {
                std::size_t used = 0;
                int const r = std::stoi(item, &used);
                if (used != item.size())
                {
                    throw std::invalid_argument(item);
                }
                out.push_back(r);
            }
            catch (std::exception const&)
            {
                throw InputError("removal counts must be integers (got '" + item + "')");
            }
        }
        return out;
    }

    SchemeDescriptor descriptor(std::vector<double> const& x, int units, std::string const& removals) const
    {
        int const size = static_cast<int>(x.size());
        if (scheme == "iid")
        {
            return scheme::IID{size};
        }
        if (scheme == "type2")
        {
            if (units <= 0)
            {
                throw InputError("type2 scheme needs --units1/--units2 (number of units on test)");
            }
            return scheme::TypeII{units, size};
        }
        if (scheme == "progressive")
        {
            std::vector<int> r = parse_removals(removals, x.size());
            if (r.size() != x.size())
            {
                throw InputError("progressive scheme needs one removal count per observed failure");
            }
            int total = size;
            for (int v : r)
            {
                total += v;
            }
            return scheme::ProgressiveTypeII{total, size, r};
        }
        return scheme::Records{size};
    }

    void run(std::ostream& out, std::ostream& err) const
    {
        Samples const s = load_samples(data);
        // The embedded dataset lists complete samples in no particular order.
        auto prepare = [&](std::vector<double> x) {
            if (scheme == "iid" || !data.builtin.empty())
            {
                std::sort(x.begin(), x.end());
            }
            return x;
        };
        std::vector<double> const x1 = prepare(s.x1);
        std::vector<double> const x2 = prepare(s.x2);
        SufficientStats const s1 = scheme_to_stats(descriptor(x1, units1, removals1), x1);
        SufficientStats const s2 = scheme_to_stats(descriptor(x2, units2, removals2), x2);
        if (est.format != "csv")
        {
            out << "scheme: " << scheme << '\n';
        }
        print_stats(out, s1, s2, *std::min_element(x1.begin(), x1.end()), *std::min_element(x2.begin(), x2.end()),
                    est);
        print_estimates(out, err, s1, s2, est);
    }
};

int report(std::ostream& err, char const* kind, std::exception const& e, int code)
{
    err << "error (" << kind << "): " << e.what() << '\n';
    return code;
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Estimation of ordered exponential scale parameters from doubly type-II censored samples",
                 "ordscale"};
    app.require_subcommand(1);

    EstimateCommand estimate;
    auto* est_app = app.add_subcommand("estimate", "Evaluate estimators on two samples");
    add_data_flags(est_app, estimate.data);
    add_estimator_flags(est_app, estimate.est);
    est_app->add_option("--a1", estimate.a1, "First observed rank, population 1")->capture_default_str();
    est_app->add_option("--b1", estimate.b1, "Last observed rank, population 1 (default n1)");
    est_app->add_option("--a2", estimate.a2, "First observed rank, population 2")->capture_default_str();
    est_app->add_option("--b2", estimate.b2, "Last observed rank, population 2 (default n2)");

    SimulateCommand simulate;
    auto* sim_app = app.add_subcommand("simulate", "Monte Carlo risk and relative risk improvement over eta");
    simulate.app = sim_app;
    sim_app->add_option("--preset", simulate.preset, "Figure preset fig1 .. fig14");
    sim_app->add_option("--panel", simulate.panel, "Panel of the preset (1-based)")->capture_default_str();
    sim_app->add_option("--config", simulate.config_path, "key=value configuration file");
    sim_app->add_option("--out", simulate.out_path, "Output CSV path")->required();
    sim_app->add_option("--n1", simulate.n1, "Sample size, population 1");
    sim_app->add_option("--a1", simulate.a1, "First observed rank, population 1");
    sim_app->add_option("--b1", simulate.b1, "Last observed rank, population 1");
    sim_app->add_option("--n2", simulate.n2, "Sample size, population 2");
    sim_app->add_option("--a2", simulate.a2, "First observed rank, population 2");
    sim_app->add_option("--b2", simulate.b2, "Last observed rank, population 2");
    sim_app->add_option("--mu1", simulate.mu1, "Location, population 1");
    sim_app->add_option("--mu2", simulate.mu2, "Location, population 2");
    sim_app->add_option("--sigma2", simulate.sigma2, "Scale of population 2");
    sim_app->add_option("--eta", simulate.eta, "eta grid: list '0.1,0.5,1' or range '0.1:1:0.1'");
    sim_app->add_option("--replicates", simulate.replicates, "Monte Carlo replicates per eta");
    sim_app->add_option("--seed", simulate.seed, "Random seed");
    sim_app->add_option("--loss", simulate.loss, "quadratic, entropy or symmetric");
    sim_app->add_option("--target", simulate.target, "sigma1 or sigma2");
    sim_app->add_option("--estimators", simulate.estimators, "Comma-separated estimator keys or 'all'");
    sim_app->add_option("--alpha", simulate.alpha, "Exponent scale of the alpha-family estimators");
    sim_app->add_option("--epsilon", simulate.epsilon, "Shrinkage exponent of the Strawderman-type estimator");
    sim_app->add_option("--threads", simulate.threads, "Worker threads (0 = automatic)");
    sim_app->add_flag("--sample-path", simulate.sample_path, "Simulate full samples instead of (x_a, v) directly");

    TablesCommand tables;
    auto* tab_app = app.add_subcommand("tables", "Reproduce the jute-fibre estimate tables");
    tab_app->add_option("--which", tables.which, "3..8 or all")->capture_default_str();
    tab_app->add_flag("--compare", tables.compare, "Show published values and flag deviations > 0.02");
    tab_app->add_flag("--reconstruct-missing", tables.reconstruct,
                      "Use the reconstructed 30th gauge-5 observation");
    tab_app->add_option("--alpha", tables.alpha, "Exponent scale of the alpha-family column")->capture_default_str();

    SchemesCommand schemes;
    auto* sch_app = app.add_subcommand("schemes", "Estimators under i.i.d., type-II, progressive or record sampling");
    sch_app->add_option("--scheme", schemes.scheme, "Sampling scheme")
        ->required()
        ->check(CLI::IsMember({"iid", "type2", "progressive", "records"}));
    add_data_flags(sch_app, schemes.data);
    add_estimator_flags(sch_app, schemes.est);
    sch_app->add_option("--units1", schemes.units1, "type2: units on test, population 1");
    sch_app->add_option("--units2", schemes.units2, "type2: units on test, population 2");
    sch_app->add_option("--removals1", schemes.removals1, "progressive: removal counts, population 1");
    sch_app->add_option("--removals2", schemes.removals2, "progressive: removal counts, population 2");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try
    {
        if (est_app->parsed())
        {
            estimate.run(out, err);
        }
        else if (sim_app->parsed())
        {
            simulate.run(out, err);
        }
        else if (tab_app->parsed())
        {
            tables.run(out, err);
        }
        else if (sch_app->parsed())
        {
            schemes.run(out, err);
        }
    }
    catch (NumericalError const& e)
    {
        return report(err, "numerical", e, kExitNumerical);
    }
    catch (SchemeError const& e)
    {
        return report(err, "scheme", e, kExitUsage);
    }
    catch (ConfigError const& e)
    {
        return report(err, "config", e, kExitUsage);
    }
    catch (IoError const& e)
    {
        return report(err, "io", e, kExitUsage);
    }
    catch (Error const& e)
    {
        return report(err, "input", e, kExitUsage);
    }
    return kExitOk;
}

}  // namespace ordscale::cli
