// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ordscale/rng.hpp"

namespace ordscale {

//! Sampling design reduced to its order-statistic indices.
//!
//! The a-th through b-th order statistics of an n-sample are observed. The
//! coefficient kappa multiplies the minimum-observation term in the Stein-type
//! estimators; it equals n - a + 1 for doubly type-II censoring and is
//! scheme-specific otherwise.
struct CensoringScheme
{
    int n = 0;
    int a = 1;
    int b = 0;
    double kappa = 0.0;

    //! Gamma shape of the total-time-on-test statistic, b - a.
    [[nodiscard]] int shape() const { return b - a; }

    //! Throws SchemeError unless 1 <= a <= b <= n, b - a >= 2 and kappa > 0.
    void validate() const;

    //! Doubly type-II scheme with kappa = n - a + 1.
    static CensoringScheme doubly_type2(int n, int a, int b);
};

//! Reduced data of one population: x_a and the total-time-on-test v.
struct SufficientStats
{
    double x_a = 0.0;
    double v = 0.0;
    CensoringScheme scheme;

    void validate() const;
};

struct PopulationParams
{
    double mu = 0.0;
    double sigma = 1.0;

    void validate() const;
};

namespace scheme {

struct DoublyTypeII
{
    int n;
    int a;
    int b;
};

struct IID
{
    int n;
};

//! First r failures out of N units on test.
struct TypeII
{
    int N;
    int r;
};

//! Progressive type-II: n units, m observed failures, removals[j] surviving
//! units withdrawn at the j-th failure. Requires m + sum(removals) = n.
struct ProgressiveTypeII
{
    int n;
    int m;
    std::vector<int> removals;
};

//! The first k upper record values of an i.i.d. sequence.
struct Records
{
    int k;
};

}  // namespace scheme

using SchemeDescriptor = std::variant<scheme::DoublyTypeII, scheme::IID, scheme::TypeII,
                                      scheme::ProgressiveTypeII, scheme::Records>;

//! Human-readable name of the descriptor's alternative ("doubly-type2", "iid", ...).
std::string scheme_name(SchemeDescriptor const& desc);

//! Reduce a sorted full sample to (x_a, v) with 1-based indices a, b.
SufficientStats sufficient_stats(std::vector<double> const& sorted_sample, int a, int b);

//! Draw (x_a, v) directly: v ~ Gamma(b - a, sigma) and x_a from its marginal.
SufficientStats simulate_stats(CensoringScheme const& scheme, PopulationParams const& params, Rng& rng);

//! Draw n shifted exponentials, sort and reduce. Slower reference path for
//! validating simulate_stats.
SufficientStats simulate_stats_by_sample(CensoringScheme const& scheme, PopulationParams const& params,
                                         Rng& rng);

//! Effective (n, a, b, kappa) of a sampling design.
CensoringScheme effective_scheme(SchemeDescriptor const& desc);

//! Reduce the observed data of a sampling design to sufficient statistics.
//!
//! Expected raw data per design:
//!  - DoublyTypeII: the b - a + 1 observed order statistics X(a) .. X(b);
//!  - IID: all n observations in any order;
//!  - TypeII: the r smallest of N observations;
//!  - ProgressiveTypeII: the m observed failure times in order;
//!  - Records: the k record values in order.
SufficientStats scheme_to_stats(SchemeDescriptor const& desc, std::vector<double> const& raw_data);

//! Simulate the raw observations of a design by literally running it
//! (sorting, withdrawing survivors at random, scanning for records).
std::vector<double> simulate_raw(SchemeDescriptor const& desc, PopulationParams const& params, Rng& rng);

//! Parse a data file: one ASCII decimal per line; blank lines and lines
//! starting with '#' are skipped.
std::vector<double> read_data_file(std::string const& path);

}  // namespace ordscale
