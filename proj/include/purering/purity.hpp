/**
 * @file purity.hpp
 * @brief Structural operations on the representable ring: membership in a
 *        purity closure, exact division witnesses, the per-prime splitting,
 *        and the quotient homomorphism onto the step-function ring.
 */
#ifndef PURERING_PURITY_HPP
#define PURERING_PURITY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "purering/element.hpp"
#include "purering/partition.hpp"

namespace purering {

enum class LatticeKind { Full, Ideal };

/// An integer lattice of step functions over a partition: all integer tails
/// (Full), or integer tails supported on a nonempty subset of blocks (Ideal).
/// Membership of x in its purity closure asks for some k >= 1 with k*x in the
/// lattice up to finitely many coordinates.
class LatticeSpec {
public:
    static LatticeSpec full(PrimePartition partition);
    static LatticeSpec ideal(PrimePartition partition, std::set<BlockId> blocks);

    const PrimePartition& partition() const { return partition_; }
    LatticeKind kind() const { return kind_; }
    const std::set<BlockId>& ideal_blocks() const { return ideal_blocks_; }

private:
    PrimePartition partition_;
    LatticeKind kind_ = LatticeKind::Full;
    std::set<BlockId> ideal_blocks_;
};

/// Least k >= 1 with all tails of k*x integral: the lcm of tail denominators.
Int minimal_multiplier(const TailedElement& x);

/// Whether some positive multiple of x agrees, off finitely many primes, with
/// an integer step function of the lattice. Decided by refining the two
/// partitions and checking per-lattice-block tail constancy (and vanishing
/// outside the ideal support).
bool is_member(const TailedElement& x, const LatticeSpec& lattice);

/// Result of exact division: the quotient, or the first prime p | n with a
/// nonzero coordinate (divisibility fails exactly there).
struct DivisionResult {
    std::optional<TailedElement> quotient;
    int64_t blocking_prime = 0;
    bool ok() const { return quotient.has_value(); }
};

/// y with n*y = x, defined iff every coordinate of x at primes dividing n is
/// zero; the dead coordinates of y at those primes are set to 0.
DivisionResult divide_exact(const TailedElement& x, const Int& n);

/// x = torsion + p * cofactor with torsion supported on {p} and the
/// cofactor's coordinate at p set to 0.
struct Splitting {
    TailedElement torsion;
    TailedElement cofactor;
};
Splitting split_at(const TailedElement& x, int64_t p);

/// Element of the quotient by the torsion part: a rational step function over
/// a canonical partition. Scalar division always succeeds (the quotient is a
/// Q-algebra).
class QuotientElement {
public:
    QuotientElement();  // zero

    static QuotientElement constant(const Rat& value);
    static QuotientElement from_parts(const PrimePartition& partition,
                                      const std::vector<Rat>& values);

    const PrimePartition& partition() const { return partition_; }
    const std::vector<Rat>& values() const { return values_; }
    bool is_zero() const;

    friend QuotientElement operator+(const QuotientElement&, const QuotientElement&);
    friend QuotientElement operator*(const QuotientElement&, const QuotientElement&);
    friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

private:
    PrimePartition partition_;
    std::vector<Rat> values_;
};

/// Image of x in the quotient: drops the fixes, keeps the tail step function.
/// Kernel = the torsion elements.
QuotientElement quotient_map(const TailedElement& x);

/// value / k per block; k >= 1.
QuotientElement divide_scalar(const QuotientElement& q, const Int& k);

}  // namespace purering

#endif
