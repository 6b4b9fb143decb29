// SPDX-License-Identifier: Apache-2.0
//! Monte Carlo risk estimation with common random numbers.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordscale/censored_model.hpp"
#include "ordscale/estimators.hpp"
#include "ordscale/loss.hpp"

namespace ordscale {

struct SimConfig
{
    CensoringScheme scheme1 = CensoringScheme::doubly_type2(8, 1, 8);
    CensoringScheme scheme2 = CensoringScheme::doubly_type2(10, 1, 10);
    double mu1 = 0.0;
    double mu2 = 0.0;
    //! Values of eta = sigma1 / sigma2, strictly increasing in (0, 1].
    std::vector<double> eta_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    double sigma2 = 1.0;
    long replicates = 50000;
    std::uint64_t seed = 42;
    Target target = Target::sigma1;
    //! Estimators of `target`; the baseline is added in front if missing.
    std::vector<EstimatorId> estimators;
    EstimatorOptions options;
    //! Worker threads; 0 selects ORDSCALE_THREADS or the hardware count.
    int threads = 0;
    //! Draw full samples and sort them instead of sampling (x_a, v) directly.
    bool sample_path = false;

    //! Throws ConfigError describing the first violated constraint.
    void validate() const;
};

struct RiskRow
{
    double eta = 0.0;
    EstimatorId estimator = EstimatorId::baee1;
    double risk = 0.0;
    //! Standard error of the risk estimate.
    double std_error = 0.0;
    //! Standard error of the paired difference to the baseline risk.
    double diff_std_error = 0.0;
    //! 100 (risk - baseline) / baseline; negative values mean improvement.
    double rri = 0.0;
    //! -rri, positive for an improved estimator.
    double improvement = 0.0;
    //! Fingerprint of every sufficient statistic the estimator was given.
    std::uint64_t input_hash = 0;
};

struct RiskTable
{
    std::vector<RiskRow> rows;
};

//! Replicates are processed in fixed-size blocks with one random stream
//! per (eta index, block index).
inline constexpr long kBlockSize = 1000;

//! Risk and standard error of one estimator at one grid value of eta.
RiskRow estimate_risk(SimConfig const& config, EstimatorId estimator, double eta);

//! Every configured estimator at every eta, grouped by eta then estimator.
RiskTable rri_curve(SimConfig const& config);

//! Worker count used for a configuration after applying ORDSCALE_THREADS.
int resolve_threads(int requested);

void write_csv(RiskTable const& table, std::ostream& out);
void write_csv(RiskTable const& table, std::string const& path);

//! "0.1,0.5,1" or an inclusive range "start:stop:step".
std::vector<double> parse_eta_grid(std::string const& text);

//! Parse a flat key=value configuration (see README for the keys). Keys not
//! present keep their defaults.
SimConfig parse_config(std::istream& in, std::string const& origin = "<config>");
SimConfig load_config(std::string const& path);

//! Figure presets: "fig1" .. "fig14", each with one or more panels
//! (1-based) of sample sizes and locations.
SimConfig preset_config(std::string const& name, int panel = 1);
int preset_panels(std::string const& name);
std::vector<std::string> preset_names();

}  // namespace ordscale
