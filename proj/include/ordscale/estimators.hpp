// SPDX-License-Identifier: Apache-2.0
//! Uniform access to every estimator by identifier.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordscale/censored_model.hpp"
#include "ordscale/loss.hpp"

namespace ordscale {

enum class Target
{
    sigma1,
    sigma2,
};

enum class EstimatorId
{
    baee1,
    stein1_s1,
    stein1_s2,
    stein1_s3,
    rmle1,
    rmle1_improved,
    kubokawa1,
    maruyama1,
    genbayes1,
    strawderman1,
    baee2,
    stein2_s1,
    stein2_s2,
    double_shrink2,
    rmle2,
    rmle2_improved,
    kubokawa2,
    maruyama2,
    genbayes2,
};

struct EstimatorInfo
{
    EstimatorId id;
    //! Stable key used on the command line and in CSV output.
    std::string_view key;
    //! Conventional symbol, e.g. "δ_1S1".
    std::string_view symbol;
    Target target;
    std::string_view description;
    //! Accepts user-supplied (custom) losses.
    bool supports_custom_loss;
};

//! Every estimator, sigma_1 ones first, in declaration order.
std::span<EstimatorInfo const> all_estimators();
EstimatorInfo const& estimator_info(EstimatorId id);

//! The best affine equivariant estimator of a target; the risk baseline.
EstimatorId baseline_for(Target target);

std::string_view target_name(Target target);
Target parse_target(std::string_view text);

//! Parse one key. Exact keys ("1S1", "kubokawa2", ...) are accepted for any
//! target; target-free aliases ("baee", "s1", "rmle", "kubokawa", ...)
//! resolve against `target`. Case-insensitive. Throws InputError.
EstimatorId parse_estimator(std::string_view text, Target target);

//! Comma-separated list or "all" (every estimator of the target).
std::vector<EstimatorId> parse_estimator_list(std::string_view text, Target target);

struct EstimatorOptions
{
    LossKind loss = LossKind::quadratic();
    //! Exponent scale of the alpha-family estimators.
    double alpha = 1.5;
    //! Shrinkage exponent of the Strawderman-type estimator.
    double epsilon = 1.0;
};

//! Whether `id` can be evaluated under `options` (loss restrictions).
bool is_applicable(EstimatorId id, EstimatorOptions const& options);

//! Value of the estimator on the sufficient statistics of both populations.
//! Throws DomainError when the estimator is not defined for the loss.
double evaluate(EstimatorId id, SufficientStats const& s1, SufficientStats const& s2,
                EstimatorOptions const& options);

}  // namespace ordscale
