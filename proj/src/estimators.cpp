// SPDX-License-Identifier: Apache-2.0
#include "ordscale/estimators.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ordscale/errors.hpp"
#include "ordscale/sigma1.hpp"
#include "ordscale/sigma2.hpp"

namespace ordscale {
namespace {

using E = EstimatorId;
using T = Target;

constexpr std::array<EstimatorInfo, 19> kEstimators{{
    {E::baee1, "baee1", "δ_01", T::sigma1, "best affine equivariant estimator", true},
    {E::stein1_s1, "1S1", "δ_1S1", T::sigma1, "Stein-type truncation using v2", true},
    {E::stein1_s2, "1S2", "δ_1S2", T::sigma1, "Stein-type truncation using v2 and x_a1", true},
    {E::stein1_s3, "1S3", "δ_1S3", T::sigma1, "Stein-type truncation using v2, x_a1 and x_a2", true},
    {E::rmle1, "rmle1", "δ_Rmle", T::sigma1, "restricted maximum likelihood estimator", true},
    {E::rmle1_improved, "rmle1_improved", "δ_Rmle^φ", T::sigma1, "Stein-type improvement of the restricted MLE",
     true},
    {E::kubokawa1, "kubokawa1", "δ_φ1^0", T::sigma1, "boundary estimator of the integral-expression class", true},
    {E::maruyama1, "maruyama1", "δ_φα,1", T::sigma1, "smooth alpha-family estimator", false},
    {E::genbayes1, "genbayes1", "δ_B^0", T::sigma1, "generalized Bayes estimator", false},
    {E::strawderman1, "strawderman1", "δ_φ^1", T::sigma1, "Strawderman-type shrinkage estimator", false},
    {E::baee2, "baee2", "δ_02", T::sigma2, "best affine equivariant estimator", true},
    {E::stein2_s1, "2S1", "δ_2S1", T::sigma2, "Stein-type expansion using v1", true},
    {E::stein2_s2, "2S2", "δ_2S2", T::sigma2, "Stein-type truncation using x_a2", true},
    {E::double_shrink2, "2S3", "δ_2S3", T::sigma2, "double shrinkage combining 2S1 and 2S2", true},
    {E::rmle2, "rmle2", "δ*_Rmle", T::sigma2, "restricted maximum likelihood estimator", true},
    {E::rmle2_improved, "rmle2_improved", "δ*_Rmle^φ", T::sigma2, "Stein-type improvement of the restricted MLE",
     true},
    {E::kubokawa2, "kubokawa2", "δ_φ2^0", T::sigma2, "boundary estimator of the integral-expression class", true},
    {E::maruyama2, "maruyama2", "δ*_φα,1", T::sigma2, "smooth alpha-family estimator", false},
    {E::genbayes2, "genbayes2", "δ*_B^0", T::sigma2, "generalized Bayes estimator", false},
}};

std::string lower(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos)
    {
        return {};
    }
    auto const last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

}  // namespace

std::span<EstimatorInfo const> all_estimators()
{
    return kEstimators;
}

EstimatorInfo const& estimator_info(EstimatorId id)
{
    return kEstimators[static_cast<std::size_t>(id)];
}

EstimatorId baseline_for(Target target)
{
    return target == Target::sigma1 ? EstimatorId::baee1 : EstimatorId::baee2;
}

std::string_view target_name(Target target)
{
    return target == Target::sigma1 ? "sigma1" : "sigma2";
}

Target parse_target(std::string_view text)
{
    std::string const s = lower(text);
    if (s == "sigma1" || s == "1")
    {
        return Target::sigma1;
    }
    if (s == "sigma2" || s == "2")
    {
        return Target::sigma2;
    }
    throw InputError("unknown target '" + std::string(text) + "' (expected sigma1 or sigma2)");
}

EstimatorId parse_estimator(std::string_view text, Target target)
{
    std::string const s = lower(trim(text));
    for (auto const& e : kEstimators)
    {
        if (lower(e.key) == s)
        {
            return e.id;
        }
    }
    bool const one = target == Target::sigma1;
    if (s == "baee")
    {
        return one ? E::baee1 : E::baee2;
    }
    if (s == "s1")
    {
        return one ? E::stein1_s1 : E::stein2_s1;
    }
    if (s == "s2")
    {
        return one ? E::stein1_s2 : E::stein2_s2;
    }
    if (s == "s3")
    {
        return one ? E::stein1_s3 : E::double_shrink2;
    }
    if (s == "rmle")
    {
        return one ? E::rmle1 : E::rmle2;
    }
    if (s == "rmle_improved")
    {
        return one ? E::rmle1_improved : E::rmle2_improved;
    }
    if (s == "kubokawa")
    {
        return one ? E::kubokawa1 : E::kubokawa2;
    }
    if (s == "maruyama")
    {
        return one ? E::maruyama1 : E::maruyama2;
    }
    if (s == "genbayes")
    {
        return one ? E::genbayes1 : E::genbayes2;
    }
    if (s == "strawderman" && one)
    {
        return E::strawderman1;
    }
    throw InputError("unknown estimator '" + std::string(text) + "' for target " + std::string(target_name(target)));
}

std::vector<EstimatorId> parse_estimator_list(std::string_view text, Target target)
{
    std::vector<EstimatorId> ids;
    if (lower(trim(text)) == "all")
    {
        for (auto const& e : kEstimators)
        {
            if (e.target == target)
            {
                ids.push_back(e.id);
            }
        }
        return ids;
    }
    std::size_t start = 0;
    while (start <= text.size())
    {
        auto const comma = text.find(',', start);
        auto const item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!trim(item).empty())
        {
            EstimatorId const id = parse_estimator(item, target);
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
            {
                ids.push_back(id);
            }
        }
        if (comma == std::string_view::npos)
        {
            break;
        }
        start = comma + 1;
    }
    if (ids.empty())
    {
        throw InputError("empty estimator list");
    }
    return ids;
}

bool is_applicable(EstimatorId id, EstimatorOptions const& options)
{
    LossFamily const family = options.loss.family();
    if (id == E::strawderman1)
    {
        return family == LossFamily::quadratic || family == LossFamily::entropy;
    }
    return family != LossFamily::custom || estimator_info(id).supports_custom_loss;
}

double evaluate(EstimatorId id, SufficientStats const& s1, SufficientStats const& s2, EstimatorOptions const& options)
{
    LossKind const& loss = options.loss;
    Sigma1Inputs const in1{s1, s2};
    Sigma2Inputs const in2{s1, s2};
    int const m1 = s1.scheme.shape();
    int const m2 = s2.scheme.shape();
    switch (id)
    {
    case E::baee1:
        return baee1(in1, loss);
    case E::stein1_s1:
        return stein1_s1(in1, loss);
    case E::stein1_s2:
        return stein1_s2(in1, loss);
    case E::stein1_s3:
        return stein1_s3(in1, loss);
    case E::rmle1:
        return restricted_mle1(in1);
    case E::rmle1_improved:
        return improved_rmle1(in1, loss);
    case E::kubokawa1:
        return kubokawa_phi1(loss, in1.z1(), m1, m2) * s1.v;
    case E::maruyama1:
        return maruyama_phi1(loss, options.alpha, in1.z1(), m1, m2) * s1.v;
    case E::genbayes1:
        return gen_bayes1(loss, s1.v, s2.v, m1, m2);
    case E::strawderman1:
        return strawderman1(in1, StrawdermanParams{options.epsilon, loss}).value;
    case E::baee2:
        return baee2(in2, loss);
    case E::stein2_s1:
        return stein2_s1(in2, loss);
    case E::stein2_s2:
        return stein2_s2(in2, loss);
    case E::double_shrink2:
        return double_shrink2(in2, loss);
    case E::rmle2:
        return restricted_mle2(in2);
    case E::rmle2_improved:
        return improved_rmle2(in2, loss);
    case E::kubokawa2:
        return kubokawa_phi2(loss, in2.z_star(), m1, m2) * s2.v;
    case E::maruyama2:
        return maruyama_phi2(loss, options.alpha, in2.z_star(), m1, m2) * s2.v;
    case E::genbayes2:
        return gen_bayes2(loss, s1.v, s2.v, m1, m2);
    }
    throw DomainError("unknown estimator");
}

}  // namespace ordscale
