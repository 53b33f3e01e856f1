// SPDX-License-Identifier: Apache-2.0
//! \file wicksell/rng.hpp
//! Seed derivation and portable uniform deviates for reproducible streams.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wicksell {

inline std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

//! Stream seed for chunk `index` of a run seeded with `seed`. Chunks drawn
//! from derived seeds are independent regardless of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (index + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t seed)
{
    std::uint64_t s = seed;
    return std::mt19937_64(splitmix64(s));
}

//! Uniform double in [0, 1) with 53 bits; avoids distribution objects so the
//! stream is identical across standard libraries.
inline double u01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

//! Uniform double in (0, 1); for quantile transforms that reject endpoints.
inline double u01_open(std::mt19937_64& rng)
{
    double u = u01(rng);
    return u > 0 ? u : 0x1.0p-53;
}

//! Exponential(1) deviate.
inline double exp1(std::mt19937_64& rng)
{
    return -std::log1p(-u01(rng));
}

//! Poisson count by accumulating unit-exponential arrivals; exact, O(mean).
inline std::uint64_t poisson_count(double mean, std::mt19937_64& rng)
{
    if (!(mean > 0))
        return 0;
    double t = 0;
    std::uint64_t k = 0;
    while (true) {
        t += exp1(rng);
        if (t > mean)
            return k;
        ++k;
    }
}

}  // namespace wicksell
