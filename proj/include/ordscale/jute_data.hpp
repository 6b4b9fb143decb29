// SPDX-License-Identifier: Apache-2.0
//! Breaking strength of jute fibre at two gauge lengths, and the estimator
//! tables computed from it.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordscale/estimators.hpp"
#include "ordscale/loss.hpp"

namespace ordscale::jute {

//! Reconstructed 30th gauge-5 observation. It is not part of the published
//! listing; it is back-solved from the published BAEE of sigma_2 under
//! quadratic loss and is used only when explicitly requested.
inline constexpr double kReconstructedGauge5 = 385.48;

//! 30 observations at gauge length 20 mm (population 1, smaller scale).
std::vector<double> const& gauge20();

//! Gauge length 5 mm (population 2): the 29 published values, plus the
//! reconstructed value when `reconstruct_missing` is true.
std::vector<double> gauge5(bool reconstruct_missing);

//! Censoring indices of one table row.
struct TableRow
{
    int a1;
    int a2;
    int b1;
    int b2;
};

//! The four censoring configurations used in every table.
std::array<TableRow, 4> const& table_rows();

//! Table numbers 3..8: 3-5 estimate sigma_1, 6-8 sigma_2, under the
//! quadratic, entropy and symmetric losses in turn.
Target table_target(int table);
LossKind table_loss(int table);

//! Column estimators: BAEE, restricted MLE, three Stein-type estimators,
//! boundary estimator and the alpha-family member with alpha = 1.5.
std::array<EstimatorId, 7> const& table_columns(Target target);

//! Published reference values, indexed [row][column].
using TableValues = std::array<std::array<double, 7>, 4>;
TableValues const& reference_table(int table);

struct ComputedTable
{
    TableValues values{};
    //! Rows whose b2 had to be reduced because only 29 gauge-5 values are
    //! available (reconstruction disabled).
    std::array<bool, 4> clamped{};
};

//! Compute a table from the embedded data. Without reconstruction the
//! gauge-5 sample has 29 values and b2 is capped at 29.
ComputedTable compute_table(int table, bool reconstruct_missing, double alpha = 1.5);

}  // namespace ordscale::jute
