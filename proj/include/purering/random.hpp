/**
 * @file random.hpp
 * @brief Deterministic pseudorandom generators for the property suites.
 *
 * Sampling uses the standard-specified mt19937_64 stream with hand-rolled
 * bounded draws, so identical seeds give identical values on every platform.
 */
#ifndef PURERING_RANDOM_HPP
#define PURERING_RANDOM_HPP

#include <cstdint>
#include <random>

#include "purering/element.hpp"
#include "purering/omega.hpp"
#include "purering/partition.hpp"
#include "purering/purity.hpp"

namespace purering {

class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform draw in [lo, hi]; modulo bias is irrelevant at test scale.
    int64_t uniform(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }

private:
    std::mt19937_64 engine_;
};

struct RandomBounds {
    int64_t max_modulus = 24;
    int64_t max_numerator = 50;
    int64_t max_denominator = 50;
    int max_fixes = 6;
};

PrimePartition random_partition(Rng& rng, int64_t max_modulus);

TailedElement random_element_over(Rng& rng, const PrimePartition& partition,
                                  const RandomBounds& bounds);

TailedElement random_element(Rng& rng, const RandomBounds& bounds);

/// The element-module contract: deterministic in (seed, partition, bounds).
TailedElement random_element(uint64_t seed, const PrimePartition& partition,
                             const RandomBounds& bounds);

QuotientElement random_quotient(Rng& rng, const RandomBounds& bounds);

BoundedDenomSeq random_sequence(Rng& rng, bool eventually_constant);

}  // namespace purering

#endif
