#pragma once

#include <cstdint>
#include <random>

#include "hyperdisc/core.hpp"

namespace hyperdisc {

// All randomness in the library flows from a caller-supplied 64-bit seed.
// Independent consumers get their own engine via make_rng(seed, stream,
// index): `stream` identifies the consumer (one constant per use site) and
// `index` the sample number, so Monte Carlo estimates are reproducible and
// independent of evaluation order or thread schedule.  mt19937_64 is fully
// pinned by the standard, and the helpers below avoid
// std::uniform_int_distribution (whose output is implementation-defined),
// so identical seeds give identical results on every platform.

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t index = 0);

// Uniform integer in [0, bound) by rejection sampling; bound >= 1.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double next_unit(std::mt19937_64& rng);

// Uniform random permutation (Fisher-Yates driven by next_below).
Permutation random_permutation(int n, std::mt19937_64& rng);

// First `count` entries of a uniform random injection from
// {0,...,count-1} into {0,...,n-1} (a partial Fisher-Yates shuffle).
std::vector<int> random_distinct(int n, int count, std::mt19937_64& rng);

}  // namespace hyperdisc
