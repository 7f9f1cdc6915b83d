#pragma once

#include <cstdint>
#include <random>

#include "lieconn/system.hpp"

namespace lieconn {

struct RandomSystemOptions {
    Family family = Family::SO;
    int n = 4;
    /// Control count is drawn uniformly from 0..max_controls.
    int max_controls = 8;
    /// Chance of a zero drift.
    double driftless_probability = 0.15;
};

/// Draws a random system. Drift coefficients are distinct small primes with
/// random signs, so no two drift coordinates share a magnitude. Controls
/// are distinct legal control elements.
BilinearSystem random_system(const RandomSystemOptions& opts, std::mt19937_64& rng);

/// Independent per-trial seed, so trials can run in any order or thread.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

}  // namespace lieconn
