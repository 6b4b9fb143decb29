// SPDX-License-Identifier: Apache-2.0
#include "ordscale/risk_sim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "ordscale/errors.hpp"
#include "ordscale/rng.hpp"

namespace ordscale {
namespace {

struct Accumulator
{
    double sum = 0.0;
    double sum_sq = 0.0;
    double diff_sum = 0.0;
    double diff_sum_sq = 0.0;
    std::uint64_t hash = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x)
{
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    return h ^ (h >> 33);
}

std::uint64_t fingerprint(std::uint64_t h, SufficientStats const& s)
{
    h = mix(h, std::bit_cast<std::uint64_t>(s.x_a));
    h = mix(h, std::bit_cast<std::uint64_t>(s.v));
    return mix(h, static_cast<std::uint64_t>(s.scheme.n) << 32 | static_cast<std::uint64_t>(s.scheme.b));
}

std::vector<EstimatorId> with_baseline(SimConfig const& config)
{
    EstimatorId const base = baseline_for(config.target);
    std::vector<EstimatorId> ids{base};
    for (EstimatorId id : config.estimators)
    {
        if (id != base)
        {
            ids.push_back(id);
        }
    }
    return ids;
}

// Simulate the given eta indices; returns accumulators indexed
// [eta][estimator] reduced in block order.
std::vector<std::vector<Accumulator>> simulate(SimConfig const& config, std::vector<EstimatorId> const& ids,
                                               std::vector<std::size_t> const& eta_indices)
{
    long const blocks = (config.replicates + kBlockSize - 1) / kBlockSize;
    std::size_t const n_eta = eta_indices.size();
    std::size_t const n_est = ids.size();
    std::vector<std::vector<Accumulator>> block_acc(n_eta * static_cast<std::size_t>(blocks),
                                                    std::vector<Accumulator>(n_est));
    bool const sigma1 = config.target == Target::sigma1;

    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    long const total_tasks = static_cast<long>(n_eta) * blocks;

    auto worker = [&] {
        std::vector<double> losses(n_est);
        for (;;)
        {
            long const task = next.fetch_add(1);
            if (task >= total_tasks || failed.load())
            {
                return;
            }
            try
            {
                std::size_t const e = static_cast<std::size_t>(task / blocks);
                long const block = task % blocks;
                std::size_t const grid_index = eta_indices[e];
                double const eta = config.eta_grid[grid_index];
                PopulationParams const p1{config.mu1, eta * config.sigma2};
                PopulationParams const p2{config.mu2, config.sigma2};
                double const truth = sigma1 ? p1.sigma : p2.sigma;
                Rng rng = Rng::derive(config.seed, grid_index, static_cast<std::uint64_t>(block));
                long const first = block * kBlockSize;
                long const last = std::min(config.replicates, first + kBlockSize);
                auto& acc = block_acc[static_cast<std::size_t>(task)];
                for (long r = first; r < last; ++r)
                {
                    SufficientStats const s1 = config.sample_path ? simulate_stats_by_sample(config.scheme1, p1, rng)
                                                                  : simulate_stats(config.scheme1, p1, rng);
                    SufficientStats const s2 = config.sample_path ? simulate_stats_by_sample(config.scheme2, p2, rng)
                                                                  : simulate_stats(config.scheme2, p2, rng);
                    for (std::size_t j = 0; j < n_est; ++j)
                    {
                        acc[j].hash = fingerprint(fingerprint(acc[j].hash, s1), s2);
                        losses[j] = config.options.loss.value(evaluate(ids[j], s1, s2, config.options) / truth);
                    }
                    for (std::size_t j = 0; j < n_est; ++j)
                    {
                        double const d = losses[j] - losses[0];
                        acc[j].sum += losses[j];
                        acc[j].sum_sq += losses[j] * losses[j];
                        acc[j].diff_sum += d;
                        acc[j].diff_sum_sq += d * d;
                    }
                }
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                {
                    error = std::current_exception();
                }
                failed.store(true);
                return;
            }
        }
    };

    int const threads = std::max(1, std::min<int>(resolve_threads(config.threads), static_cast<int>(total_tasks)));
    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i)
        {
            pool.emplace_back(worker);
        }
        for (auto& t : pool)
        {
            t.join();
        }
    }
    if (error)
    {
        std::rethrow_exception(error);
    }

    // Fixed-order reduction over blocks.
    std::vector<std::vector<Accumulator>> result(n_eta, std::vector<Accumulator>(n_est));
    for (std::size_t e = 0; e < n_eta; ++e)
    {
        for (long b = 0; b < blocks; ++b)
        {
            auto const& acc = block_acc[e * static_cast<std::size_t>(blocks) + static_cast<std::size_t>(b)];
            for (std::size_t j = 0; j < n_est; ++j)
            {
                result[e][j].sum += acc[j].sum;
                result[e][j].sum_sq += acc[j].sum_sq;
                result[e][j].diff_sum += acc[j].diff_sum;
                result[e][j].diff_sum_sq += acc[j].diff_sum_sq;
                result[e][j].hash = mix(result[e][j].hash, acc[j].hash);
            }
        }
    }
    return result;
}

double std_error(double sum, double sum_sq, long n)
{
    if (n < 2)
    {
        return 0.0;
    }
    double const mean = sum / n;
    double const var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return std::sqrt(var / n);
}

RiskRow make_row(double eta, EstimatorId id, Accumulator const& acc, Accumulator const& base, long n)
{
    RiskRow row;
    row.eta = eta;
    row.estimator = id;
    row.risk = acc.sum / n;
    row.std_error = std_error(acc.sum, acc.sum_sq, n);
    row.diff_std_error = std_error(acc.diff_sum, acc.diff_sum_sq, n);
    double const base_risk = base.sum / n;
    if (!(base_risk > 0.0))
    {
        throw ConfigError("baseline risk is zero; relative risk improvement is undefined");
    }
    row.rri = 100.0 * (row.risk - base_risk) / base_risk;
    row.improvement = -row.rri;
    row.input_hash = acc.hash;
    return row;
}

std::string trim(std::string const& s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string const& text, std::string const& what)
{
    std::size_t used = 0;
    double value = 0.0;
    try
    {
        value = std::stod(text, &used);
    }
    catch (std::exception const&)
    {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value))
    {
        throw ConfigError(what + ": expected a number, got '" + text + "'");
    }
    return value;
}

long to_long(std::string const& text, std::string const& what)
{
    double const value = to_double(text, what);
    if (value != std::floor(value) || std::abs(value) > 9e15)
    {
        throw ConfigError(what + ": expected an integer, got '" + text + "'");
    }
    return static_cast<long>(value);
}

struct Panel
{
    int n1;
    int n2;
    double mu1;
    double mu2;
};

struct Preset
{
    Target target;
    LossFamily loss;
    std::vector<Panel> panels;
};

std::map<std::string, Preset> const& presets()
{
    using L = LossFamily;
    static std::map<std::string, Preset> const table{
        {"fig1", {Target::sigma1, L::quadratic, {{8, 10, 0, 0}, {12, 12, 0.2, 0.3}, {14, 15, 0.4, 0.7}}}},
        {"fig2", {Target::sigma1, L::quadratic, {{13, 18, -0.1, -0.2}, {7, 8, -0.4, -0.5}}}},
        {"fig3", {Target::sigma1, L::entropy, {{8, 10, 0, 0}}}},
        {"fig4", {Target::sigma1, L::entropy, {{12, 12, 0.2, 0.3}, {14, 15, 0.4, 0.7}, {13, 18, -0.1, -0.2}}}},
        {"fig5", {Target::sigma1, L::entropy, {{7, 8, -0.4, -0.5}}}},
        {"fig6", {Target::sigma1, L::symmetric, {{8, 10, 0, 0}, {12, 12, 0.2, 0.3}}}},
        {"fig7", {Target::sigma1, L::symmetric, {{14, 15, 0.4, 0.7}, {13, 18, -0.1, -0.2}, {7, 8, -0.4, -0.5}}}},
        {"fig8",
         {Target::sigma2, L::quadratic, {{8, 10, 0, 0}, {12, 12, 0.05, 0.03}, {10, 9, 0.1, 0.1}, {10, 9, 0.1, 0.15}}}},
        {"fig9", {Target::sigma2, L::quadratic, {{14, 15, 0.4, 0.7}, {7, 8, -0.1, -0.2}}}},
        {"fig10", {Target::sigma2, L::entropy, {{8, 10, 0, 0}}}},
        {"fig11",
         {Target::sigma2, L::entropy, {{12, 12, 0.05, 0.03}, {10, 9, 0.1, 0.1}, {10, 9, 0.1, 0.15}, {14, 15, 0.4, 0.7}}}},
        {"fig12", {Target::sigma2, L::entropy, {{7, 8, -0.1, -0.2}}}},
        {"fig13", {Target::sigma2, L::symmetric, {{8, 10, 0, 0}, {12, 12, 0.05, 0.03}}}},
        {"fig14",
         {Target::sigma2,
          L::symmetric,
          {{10, 9, 0.1, 0.1}, {10, 9, 0.1, 0.15}, {14, 15, 0.4, 0.7}, {7, 8, -0.1, -0.2}}}},
    };
    return table;
}

LossKind named_loss(LossFamily family)
{
    switch (family)
    {
    case LossFamily::quadratic:
        return LossKind::quadratic();
    case LossFamily::entropy:
        return LossKind::entropy();
    default:
        return LossKind::symmetric();
    }
}

}  // namespace

void SimConfig::validate() const
{
    try
    {
        scheme1.validate();
        scheme2.validate();
    }
    catch (SchemeError const& e)
    {
        throw ConfigError(std::string("invalid censoring scheme: ") + e.what());
    }
    if (eta_grid.empty())
    {
        throw ConfigError("eta grid is empty");
    }
    for (std::size_t i = 0; i < eta_grid.size(); ++i)
    {
        if (!(eta_grid[i] > 0.0 && eta_grid[i] <= 1.0))
        {
            throw ConfigError("eta values must lie in (0, 1]");
        }
        if (i > 0 && !(eta_grid[i] > eta_grid[i - 1]))
        {
            throw ConfigError("eta grid must be strictly increasing");
        }
    }
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2) || !std::isfinite(mu1) || !std::isfinite(mu2))
    {
        throw ConfigError("sigma2 must be positive and locations finite");
    }
    if (replicates < 1)
    {
        throw ConfigError("replicates must be at least 1");
    }
    if (threads < 0)
    {
        throw ConfigError("threads must be non-negative");
    }
    for (EstimatorId id : estimators)
    {
        auto const& info = estimator_info(id);
        if (info.target != target)
        {
            throw ConfigError("estimator " + std::string(info.key) + " does not estimate "
                              + std::string(target_name(target)));
        }
        if (!is_applicable(id, options))
        {
            throw ConfigError("estimator " + std::string(info.key) + " is not defined for the "
                              + options.loss.name() + " loss");
        }
    }
}

int resolve_threads(int requested)
{
    int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (char const* env = std::getenv("ORDSCALE_THREADS"))
    {
        char* end = nullptr;
        long const cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0)
        {
            n = std::min<long>(n, cap);
        }
    }
    return std::max(1, n);
}

RiskRow estimate_risk(SimConfig const& config, EstimatorId estimator, double eta)
{
    config.validate();
    auto const it = std::find(config.eta_grid.begin(), config.eta_grid.end(), eta);
    if (it == config.eta_grid.end())
    {
        throw ConfigError("eta " + std::to_string(eta) + " is not on the configured grid");
    }
    if (estimator_info(estimator).target != config.target)
    {
        throw ConfigError("estimator " + std::string(estimator_info(estimator).key) + " does not estimate "
                          + std::string(target_name(config.target)));
    }
    SimConfig single = config;
    single.estimators = {estimator};
    std::vector<EstimatorId> const ids = with_baseline(single);
    auto const index = static_cast<std::size_t>(it - config.eta_grid.begin());
    auto const acc = simulate(single, ids, {index});
    std::size_t const j = ids.size() == 1 ? 0 : 1;
    return make_row(eta, estimator, acc[0][j], acc[0][0], config.replicates);
}

RiskTable rri_curve(SimConfig const& config)
{
    config.validate();
    std::vector<EstimatorId> const ids = with_baseline(config);
    std::vector<std::size_t> indices(config.eta_grid.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
    {
        indices[i] = i;
    }
    auto const acc = simulate(config, ids, indices);
    RiskTable table;
    for (std::size_t e = 0; e < indices.size(); ++e)
    {
        for (std::size_t j = 0; j < ids.size(); ++j)
        {
            table.rows.push_back(make_row(config.eta_grid[e], ids[j], acc[e][j], acc[e][0], config.replicates));
        }
    }
    return table;
}

void write_csv(RiskTable const& table, std::ostream& out)
{
    out << "eta,estimator,risk,stderr,rri,improvement\n";
    char buffer[256];
    for (auto const& row : table.rows)
    {
        std::snprintf(buffer, sizeof buffer, "%.10g,%s,%.10g,%.10g,%.10g,%.10g\n", row.eta,
                      std::string(estimator_info(row.estimator).key).c_str(), row.risk, row.std_error, row.rri,
                      row.improvement);
        out << buffer;
    }
}

void write_csv(RiskTable const& table, std::string const& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_csv(table, out);
    out.flush();
    if (!out)
    {
        throw IoError("failed writing '" + path + "'");
    }
}

std::vector<double> parse_eta_grid(std::string const& text)
{
    std::vector<double> grid;
    std::string const t = trim(text);
    if (std::count(t.begin(), t.end(), ':') == 2)
    {
        auto const c1 = t.find(':');
        auto const c2 = t.find(':', c1 + 1);
        double const start = to_double(trim(t.substr(0, c1)), "eta range start");
        double const stop = to_double(trim(t.substr(c1 + 1, c2 - c1 - 1)), "eta range stop");
        double const step = to_double(trim(t.substr(c2 + 1)), "eta range step");
        if (!(step > 0.0) || stop < start)
        {
            throw ConfigError("eta range needs start <= stop and step > 0");
        }
        long const count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i)
        {
            // Snap to a 1e-12 lattice so that 0.1 + 2 * 0.1 is stored as 0.3.
            grid.push_back(std::round((start + i * step) * 1e12) / 1e12);
        }
        return grid;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (!trim(item).empty())
        {
            grid.push_back(to_double(trim(item), "eta"));
        }
    }
    if (grid.empty())
    {
        throw ConfigError("eta grid is empty");
    }
    return grid;
}

SimConfig parse_config(std::istream& in, std::string const& origin)
{
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        std::string const t = trim(line);
        if (t.empty() || t[0] == '#')
        {
            continue;
        }
        auto const eq = t.find('=');
        if (eq == std::string::npos)
        {
            throw ConfigError(origin + " line " + std::to_string(line_no) + ": expected key=value");
        }
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    static std::vector<std::string> const known{"n1",     "a1",         "b1",       "n2",     "a2",
                                                "b2",     "mu1",        "mu2",      "eta",    "sigma2",
                                                "replicates", "seed",   "loss",     "target", "estimators",
                                                "alpha",  "epsilon",    "threads",  "sample_path"};
    for (auto const& [key, value] : kv)
    {
        if (std::find(known.begin(), known.end(), key) == known.end())
        {
            throw ConfigError(origin + ": unknown key '" + key + "'");
        }
    }
    auto get = [&](std::string const& key) -> std::string const* {
        auto const it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    SimConfig config;
    auto scheme = [&](char which, CensoringScheme const& fallback) {
        std::string const s(1, which);
        int const n = get("n" + s) ? static_cast<int>(to_long(*get("n" + s), "n" + s)) : fallback.n;
        int const a = get("a" + s) ? static_cast<int>(to_long(*get("a" + s), "a" + s)) : 1;
        int const b = get("b" + s) ? static_cast<int>(to_long(*get("b" + s), "b" + s)) : n;
        try
        {
            return CensoringScheme::doubly_type2(n, a, b);
        }
        catch (SchemeError const& e)
        {
            throw ConfigError(origin + ": " + e.what());
        }
    };
    config.scheme1 = scheme('1', config.scheme1);
    config.scheme2 = scheme('2', config.scheme2);
    if (auto v = get("mu1"))
    {
        config.mu1 = to_double(*v, "mu1");
    }
    if (auto v = get("mu2"))
    {
        config.mu2 = to_double(*v, "mu2");
    }
    if (auto v = get("eta"))
    {
        config.eta_grid = parse_eta_grid(*v);
    }
    if (auto v = get("sigma2"))
    {
        config.sigma2 = to_double(*v, "sigma2");
    }
    if (auto v = get("replicates"))
    {
        config.replicates = to_long(*v, "replicates");
    }
    if (auto v = get("seed"))
    {
        config.seed = static_cast<std::uint64_t>(to_long(*v, "seed"));
    }
    try
    {
        if (auto v = get("loss"))
        {
            config.options.loss = parse_loss(*v);
        }
        if (auto v = get("target"))
        {
            config.target = parse_target(*v);
        }
        if (auto v = get("estimators"))
        {
            config.estimators = parse_estimator_list(*v, config.target);
        }
    }
    catch (InputError const& e)
    {
        throw ConfigError(origin + ": " + e.what());
    }
    if (auto v = get("alpha"))
    {
        config.options.alpha = to_double(*v, "alpha");
    }
    if (auto v = get("epsilon"))
    {
        config.options.epsilon = to_double(*v, "epsilon");
    }
    if (auto v = get("threads"))
    {
        config.threads = static_cast<int>(to_long(*v, "threads"));
    }
    if (auto v = get("sample_path"))
    {
        config.sample_path = *v == "1" || *v == "true" || *v == "yes";
    }
    config.validate();
    return config;
}

SimConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw IoError("cannot open configuration file '" + path + "'");
    }
    return parse_config(in, path);
}

SimConfig preset_config(std::string const& name, int panel)
{
    auto const it = presets().find(name);
    if (it == presets().end())
    {
        throw ConfigError("unknown preset '" + name + "' (expected fig1 .. fig14)");
    }
    Preset const& preset = it->second;
    if (panel < 1 || panel > static_cast<int>(preset.panels.size()))
    {
        throw ConfigError("preset " + name + " has panels 1.." + std::to_string(preset.panels.size()));
    }
    Panel const& p = preset.panels[static_cast<std::size_t>(panel - 1)];
    SimConfig config;
    config.scheme1 = CensoringScheme::doubly_type2(p.n1, 1, p.n1);
    config.scheme2 = CensoringScheme::doubly_type2(p.n2, 1, p.n2);
    config.mu1 = p.mu1;
    config.mu2 = p.mu2;
    config.target = preset.target;
    config.options.loss = named_loss(preset.loss);
    config.estimators = preset.target == Target::sigma1
                            ? parse_estimator_list("baee1,1S1,1S2,1S3,rmle1,kubokawa1", Target::sigma1)
                            : parse_estimator_list("baee2,2S1,2S2,2S3,rmle2,kubokawa2", Target::sigma2);
    return config;
}

int preset_panels(std::string const& name)
{
    auto const it = presets().find(name);
    if (it == presets().end())
    {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return static_cast<int>(it->second.panels.size());
}

std::vector<std::string> preset_names()
{
    std::vector<std::string> names;
    for (int i = 1; i <= 14; ++i)
    {
        names.push_back("fig" + std::to_string(i));
    }
    return names;
}

}  // namespace ordscale
