/**
 * @file element.hpp
 * @brief Exact elements of the product of all prime fields, given by a
 *        rational step function over a prime partition plus finitely many
 *        per-prime corrections.
 *
 * The coordinate of x at p is fixes[p] when p is fixed, and the image of the
 * block tail in Z_p otherwise. Values are kept in a unique canonical form:
 * the partition is the coarsest one the tail function factors through, its
 * blocks are the tail level sets labelled by first appearance, partition
 * exceptions are exactly the primes dividing the modulus (assigned block 0),
 * and no fix repeats what the tail already prescribes. Equality is therefore
 * structural and coincides with coordinatewise agreement at every prime.
 */
#ifndef PURERING_ELEMENT_HPP
#define PURERING_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "purering/numtheory.hpp"
#include "purering/partition.hpp"

namespace purering {

/// Additive order of an element: squarefree positive integer or infinite.
struct TorsionOrder {
    static TorsionOrder infinite() { return TorsionOrder{}; }
    static TorsionOrder finite(Int k) { return TorsionOrder{true, std::move(k)}; }

    bool finite_order = false;
    Int order = 0;  // meaningful only when finite_order

    bool is_finite() const { return finite_order; }
    friend bool operator==(const TorsionOrder&, const TorsionOrder&) = default;
};

class TailedElement {
public:
    /// The zero element.
    TailedElement();

    static TailedElement zero() { return TailedElement(); }
    static TailedElement one() { return constant(Rat(1)); }

    /// Constant tail over the trivial partition; primes dividing the
    /// denominator get coordinate 0.
    static TailedElement constant(const Rat& value);

    /// Element with tails given per block of the partition. Primes dividing a
    /// denominator of the tail at their own block default the coordinate to 0
    /// unless a fix supplies another value. Fix values must lie in [0, p).
    static TailedElement from_rational_vector(const PrimePartition& partition,
                                              const std::vector<Rat>& tails,
                                              const std::map<int64_t, int64_t>& fixes = {});

    const PrimePartition& partition() const { return partition_; }
    const std::vector<Rat>& tails() const { return tails_; }
    const std::map<int64_t, int64_t>& fixes() const { return fixes_; }

    /// Coordinate in Z_p; total on canonical values.
    Residue coordinate(int64_t prime) const;

    bool is_zero() const;
    bool is_one() const;

    /// True when every coordinate squares to itself, i.e. all tails and fixes
    /// are 0 or 1.
    bool is_idempotent() const;

    /// Finite (product of fixed primes) when all tails vanish, else infinite.
    TorsionOrder torsion_order() const;

    friend TailedElement operator+(const TailedElement&, const TailedElement&);
    friend TailedElement operator*(const TailedElement&, const TailedElement&);
    friend TailedElement operator-(const TailedElement& x) { return Int(-1) * x; }
    friend TailedElement operator-(const TailedElement& x, const TailedElement& y) {
        return x + (-y);
    }
    friend TailedElement operator*(const Int& scalar, const TailedElement&);

    /// Structural equality of canonical forms; equivalent to coordinatewise
    /// agreement at every prime.
    friend bool operator==(const TailedElement&, const TailedElement&) = default;

private:
    PrimePartition partition_;
    std::vector<Rat> tails_;
    std::map<int64_t, int64_t> fixes_;

    friend TailedElement canonicalize_element(const PrimePartition&, const std::vector<Rat>&,
                                              const std::map<int64_t, int64_t>&);
};

/// Rebuilds the unique canonical form of a raw (partition, tails, fixes)
/// triple. The triple must already be total: every prime dividing the
/// denominator of the tail at its own block has to be fixed.
TailedElement canonicalize_element(const PrimePartition& partition,
                                   const std::vector<Rat>& tails,
                                   const std::map<int64_t, int64_t>& fixes);

}  // namespace purering

#endif
