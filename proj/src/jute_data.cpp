// SPDX-License-Identifier: Apache-2.0
#include "ordscale/jute_data.hpp"

#include <algorithm>
#include <string>

#include "ordscale/censored_model.hpp"
#include "ordscale/errors.hpp"

namespace ordscale::jute {
namespace {

void require_table(int table)
{
    if (table < 3 || table > 8)
    {
        throw InputError("tables are numbered 3 to 8 (got " + std::to_string(table) + ")");
    }
}

}  // namespace

std::vector<double> const& gauge20()
{
    static std::vector<double> const data{
        71.46,  419.02, 284.64, 585.57, 456.60, 113.85, 187.85, 688.16, 662.66, 45.58,
        578.62, 756.70, 594.29, 166.49, 99.72,  707.36, 765.14, 187.13, 145.96, 350.70,
        547.44, 116.99, 375.81, 581.60, 119.86, 48.01,  200.16, 36.75,  244.53, 83.55};
    return data;
}

std::vector<double> gauge5(bool reconstruct_missing)
{
    std::vector<double> data{566.31, 270.79, 516.28, 823.03, 226.53, 367.70, 441.87, 618.57, 546.11, 268.20,
                             315.33, 809.23, 218.86, 583.97, 304.84, 129.08, 537.45, 496.28, 167.87, 306.99,
                             178.25, 370.02, 168.20, 554.61, 360.80, 260.97, 254.29, 295.51, 187.68};
    if (reconstruct_missing)
    {
        data.push_back(kReconstructedGauge5);
    }
    return data;
}

std::array<TableRow, 4> const& table_rows()
{
    static std::array<TableRow, 4> const rows{{{1, 1, 30, 30}, {2, 3, 27, 28}, {1, 1, 29, 27}, {4, 2, 30, 30}}};
    return rows;
}

Target table_target(int table)
{
    require_table(table);
    return table <= 5 ? Target::sigma1 : Target::sigma2;
}

LossKind table_loss(int table)
{
    require_table(table);
    switch ((table - 3) % 3)
    {
    case 0:
        return LossKind::quadratic();
    case 1:
        return LossKind::entropy();
    default:
        return LossKind::symmetric();
    }
}

std::array<EstimatorId, 7> const& table_columns(Target target)
{
    using E = EstimatorId;
    static std::array<E, 7> const one{E::baee1, E::rmle1, E::stein1_s1, E::stein1_s2,
                                      E::stein1_s3, E::kubokawa1, E::maruyama1};
    static std::array<E, 7> const two{E::baee2, E::rmle2, E::stein2_s1, E::stein2_s2,
                                      E::double_shrink2, E::kubokawa2, E::maruyama2};
    return target == Target::sigma1 ? one : two;
}

TableValues const& reference_table(int table)
{
    require_table(table);
    static std::array<TableValues, 6> const tables{{
        {{{303.99, 279.64, 284.38, 298.01, 303.99, 264.68, 352.90},
          {334.57, 285.16, 290.75, 310.58, 334.57, 274.79, 354.99},
          {314.18, 290.56, 295.84, 310.24, 314.18, 278.76, 360.81},
          {302.31, 262.43, 267.21, 296.89, 302.31, 247.64, 333.06}}},
        {{{314.47, 279.64, 289.28, 264.10, 314.47, 270.03, 360.61},
          {347.96, 285.16, 296.57, 245.18, 347.96, 280.85, 363.16},
          {325.40, 290.56, 301.32, 255.71, 325.40, 284.56, 376.36},
          {313.94, 262.44, 272.16, 251.30, 313.94, 253.02, 333.57}}},
        {{{320.04, 279.64, 291.81, 305.67, 320.04, 272.76, 364.53},
          {355.13, 285.16, 299.58, 319.82, 355.13, 283.97, 367.36},
          {331.37, 290.56, 304.15, 318.80, 331.37, 287.54, 380.47},
          {320.16, 262.44, 274.71, 305.07, 320.16, 255.78, 337.49}}},
        {{{255.29, 279.63, 284.37, 255.29, 284.37, 309.01, 460.22},
          {235.75, 285.15, 290.74, 235.75, 290.74, 314.15, 490.19},
          {265.18, 290.54, 295.82, 265.18, 295.82, 323.85, 491.51},
          {225.31, 262.42, 267.19, 225.31, 267.19, 287.84, 433.32}}},
        {{{264.10, 279.63, 289.27, 264.10, 289.27, 316.12, 471.33},
          {245.18, 285.15, 296.55, 245.18, 296.55, 322.15, 503.01},
          {275.38, 290.54, 301.30, 275.38, 301.30, 332.07, 504.64},
          {233.35, 262.42, 272.14, 233.35, 272.14, 294.59, 443.79}}},
        {{{268.77, 279.63, 291.80, 268.77, 298.80, 319.88, 477.27},
          {250.24, 285.15, 299.56, 250.24, 299.56, 326.40, 509.85},
          {280.84, 290.54, 304.13, 280.84, 304.13, 336.45, 511.73},
          {237.64, 262.42, 272.70, 237.64, 274.70, 298.16, 449.38}}},
    }};
    return tables[static_cast<std::size_t>(table - 3)];
}

ComputedTable compute_table(int table, bool reconstruct_missing, double alpha)
{
    require_table(table);
    std::vector<double> x1 = gauge20();
    std::vector<double> x2 = gauge5(reconstruct_missing);
    std::sort(x1.begin(), x1.end());
    std::sort(x2.begin(), x2.end());
    int const n2 = static_cast<int>(x2.size());

    EstimatorOptions options;
    options.loss = table_loss(table);
    options.alpha = alpha;
    auto const& columns = table_columns(table_target(table));

    ComputedTable out;
    for (std::size_t r = 0; r < 4; ++r)
    {
        TableRow const& row = table_rows()[r];
        int const b2 = std::min(row.b2, n2);
        out.clamped[r] = b2 != row.b2;
        SufficientStats const s1 = sufficient_stats(x1, row.a1, row.b1);
        SufficientStats const s2 = sufficient_stats(x2, row.a2, b2);
        for (std::size_t c = 0; c < columns.size(); ++c)
        {
            out.values[r][c] = evaluate(columns[c], s1, s2, options);
        }
    }
    return out;
}

}  // namespace ordscale::jute
