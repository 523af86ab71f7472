/**
 * @file partition.hpp
 * @brief Finite descriptions of partitions of the set of all primes into
 *        finitely many infinite blocks.
 *
 * A partition is a modulus m, a block label per unit residue class mod m, and
 * finitely many per-prime exceptions. Every prime dividing m carries an
 * exception (it lies in no unit class); every block is hit by at least one
 * unit class, so every block is infinite by Dirichlet. Canonical form uses
 * the minimal modulus and keeps no exception that repeats the class label.
 */
#ifndef PURERING_PARTITION_HPP
#define PURERING_PARTITION_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "purering/numtheory.hpp"

namespace purering {

using BlockId = int;

class PrimePartition {
public:
    /// The one-block partition (modulus 1, no exceptions).
    PrimePartition();
    static PrimePartition trivial() { return PrimePartition(); }

    /// Builds from raw parts and canonicalizes the representation (minimal
    /// modulus, redundant exceptions dropped) without changing the block
    /// function. unit_class_blocks must label every unit residue mod m with
    /// labels forming a contiguous range 0..n-1; missing mandatory exceptions
    /// (primes dividing m) default to block 0.
    static PrimePartition from_parts(int64_t modulus,
                                     const std::map<int64_t, BlockId>& unit_class_blocks,
                                     const std::map<int64_t, BlockId>& exceptions);

    int64_t modulus() const { return modulus_; }
    int block_count() const { return block_count_; }

    /// Block of a prime: exception entry if present, class label otherwise.
    BlockId block_of(int64_t prime) const;

    /// Block of a residue coprime to the modulus.
    BlockId class_block(int64_t residue) const;

    const std::map<int64_t, BlockId>& exceptions() const { return exceptions_; }

    /// Unit residues mod modulus(), ascending ({0} for modulus 1).
    std::vector<int64_t> unit_residues() const;

    friend bool operator==(const PrimePartition&, const PrimePartition&) = default;

private:
    int64_t modulus_;
    std::vector<BlockId> class_map_;  // indexed by residue; -1 on non-unit residues
    std::map<int64_t, BlockId> exceptions_;
    int block_count_;
};

/// Common refinement of two partitions. Blocks of `common` are the
/// intersections of a left block and a right block that contain a unit class;
/// intersections made only of finitely many exceptional primes cannot form a
/// block and are dissolved: their primes keep per-prime overrides here so the
/// projections stay exact at every prime.
struct Refinement {
    PrimePartition common;
    std::vector<BlockId> left_of_block;   // common block -> left block
    std::vector<BlockId> right_of_block;  // common block -> right block
    std::map<int64_t, std::pair<BlockId, BlockId>> dissolved;

    BlockId left_block_of(int64_t prime) const;
    BlockId right_block_of(int64_t prime) const;
};

/// Common refinement with modulus lcm(m1, m2), block labels ordered by the
/// lexicographic (left block, right block) pair. refine(P, P) returns P with
/// identity projections; refine(trivial, Q) returns Q.
Refinement refine(const PrimePartition& left, const PrimePartition& right);

/// Strictly refining chain P_1, ..., P_depth starting at the trivial
/// partition: modulus 1, 4, 8, 16, ... with every unit class split per step,
/// so block counts run 1, 2, 4, 8, ...
std::vector<PrimePartition> make_chain(int depth);

/// All residues in [0, m) coprime to m, ascending ({0} for m = 1).
std::vector<int64_t> units_mod(int64_t m);

}  // namespace purering

#endif
