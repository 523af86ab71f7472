#include "purering/random.hpp"

namespace purering {

namespace {

const int64_t kFixPrimePool[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

}  // namespace

PrimePartition random_partition(Rng& rng, int64_t max_modulus) {
    int64_t modulus = rng.uniform(1, max_modulus);
    std::vector<int64_t> units = units_mod(modulus);
    int blocks = static_cast<int>(rng.uniform(1, static_cast<int64_t>(units.size())));

    // Surjective labelling, then relabel by first appearance.
    std::map<int64_t, BlockId> raw;
    for (size_t i = 0; i < units.size(); ++i) {
        BlockId b = static_cast<BlockId>(i) < blocks
                        ? static_cast<BlockId>(i)
                        : static_cast<BlockId>(rng.uniform(0, blocks - 1));
        raw[units[i]] = b;
    }
    std::map<BlockId, BlockId> relabel;
    std::map<int64_t, BlockId> classes;
    BlockId next = 0;
    for (int64_t u : units) {
        BlockId b = raw[u];
        auto [it, inserted] = relabel.emplace(b, next);
        if (inserted) ++next;
        classes[u] = it->second;
    }

    std::map<int64_t, BlockId> exceptions;
    if (modulus > 1)
        for (int64_t p : prime_divisors(Int(modulus)))
            exceptions[p] = static_cast<BlockId>(rng.uniform(0, next - 1));
    if (rng.chance(30)) {
        int extra = static_cast<int>(rng.uniform(1, 2));
        for (int i = 0; i < extra; ++i) {
            int64_t p = kFixPrimePool[rng.uniform(0, 5)];
            exceptions.try_emplace(p, static_cast<BlockId>(rng.uniform(0, next - 1)));
        }
    }
    return PrimePartition::from_parts(modulus, classes, exceptions);
}

TailedElement random_element_over(Rng& rng, const PrimePartition& partition,
                                  const RandomBounds& bounds) {
    std::vector<Rat> tails(static_cast<size_t>(partition.block_count()));
    for (Rat& t : tails)
        t = make_rat(rng.uniform(-bounds.max_numerator, bounds.max_numerator),
                     rng.uniform(1, bounds.max_denominator));
    std::map<int64_t, int64_t> fixes;
    int count = static_cast<int>(rng.uniform(0, bounds.max_fixes));
    for (int i = 0; i < count; ++i) {
        int64_t p = kFixPrimePool[rng.uniform(
            0, static_cast<int64_t>(std::size(kFixPrimePool)) - 1)];
        fixes.try_emplace(p, rng.uniform(0, p - 1));
    }
    return TailedElement::from_rational_vector(partition, tails, fixes);
}

TailedElement random_element(Rng& rng, const RandomBounds& bounds) {
    return random_element_over(rng, random_partition(rng, bounds.max_modulus), bounds);
}

TailedElement random_element(uint64_t seed, const PrimePartition& partition,
                             const RandomBounds& bounds) {
    Rng rng(seed);
    return random_element_over(rng, partition, bounds);
}

QuotientElement random_quotient(Rng& rng, const RandomBounds& bounds) {
    PrimePartition partition = random_partition(rng, bounds.max_modulus);
    std::vector<Rat> values(static_cast<size_t>(partition.block_count()));
    for (Rat& v : values)
        v = make_rat(rng.uniform(-bounds.max_numerator, bounds.max_numerator),
                     rng.uniform(1, bounds.max_denominator));
    return QuotientElement::from_parts(partition, values);
}

BoundedDenomSeq random_sequence(Rng& rng, bool eventually_constant) {
    Int k(rng.uniform(1, 20));
    std::vector<Int> prefix(static_cast<size_t>(rng.uniform(0, 4)));
    for (Int& a : prefix) a = Int(rng.uniform(-20, 20));
    std::vector<Int> coefficients(
        eventually_constant ? 1 : static_cast<size_t>(rng.uniform(1, 3)) + 1);
    for (Int& c : coefficients) c = Int(rng.uniform(-10, 10));
    if (!eventually_constant && coefficients.back() == 0) coefficients.back() = 1;
    return BoundedDenomSeq(k, std::move(prefix), IntPolynomial(std::move(coefficients)));
}

}  // namespace purering
