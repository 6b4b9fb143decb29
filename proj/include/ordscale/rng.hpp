// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace ordscale {

//! Deterministic random source. Streams are derived from a user seed plus two
//! integer coordinates so that every simulation block draws from its own
//! reproducible sequence regardless of which thread processes it.
class Rng
{
public:
    explicit Rng(std::uint64_t seed);

    //! Independent stream for coordinate (a, b) under a master seed.
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

    //! Uniform on the open interval (0, 1).
    double uniform();
    //! Standard normal.
    double normal();
    //! Standard exponential (rate 1).
    double exponential();
    //! Gamma(shape, scale); shape > 0, scale > 0.
    double gamma(double shape, double scale = 1.0);
    //! Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace ordscale
