/**
 * @file omega.hpp
 * @brief The bounded-denominator sequence ring: rational sequences with a
 *        common denominator and eventually-polynomial integer numerators.
 *
 * Term n >= 1 is prefix[n-1]/k while the prefix lasts and poly(n)/k beyond
 * it. The eventually-polynomial fragment is closed under addition and
 * multiplication; reduction happens per term on demand. An element is
 * regular (has a quasi-inverse with bounded denominators) exactly when its
 * polynomial part is constant, which is also exactly the image of the direct
 * limit of the finite-rank subrings.
 */
#ifndef PURERING_OMEGA_HPP
#define PURERING_OMEGA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "purering/numtheory.hpp"
#include "purering/structure.hpp"

namespace purering {

class BoundedDenomSeq {
public:
    BoundedDenomSeq();  // zero sequence
    BoundedDenomSeq(Int denominator, std::vector<Int> prefix, IntPolynomial poly);

    const Int& denominator() const { return denominator_; }
    const std::vector<Int>& prefix() const { return prefix_; }
    const IntPolynomial& poly() const { return poly_; }

    /// Numerator at index n >= 1 (prefix entry or polynomial value).
    Int numerator(int64_t n) const;
    /// Reduced term numerator(n) / denominator.
    Rat term(int64_t n) const;

    friend BoundedDenomSeq operator+(const BoundedDenomSeq&, const BoundedDenomSeq&);
    friend BoundedDenomSeq operator*(const BoundedDenomSeq&, const BoundedDenomSeq&);
    friend BoundedDenomSeq operator-(const BoundedDenomSeq&);

    /// Semantic equality: equal terms everywhere (prefixes compared reduced,
    /// polynomial parts compared after cross-multiplying denominators).
    friend bool operator==(const BoundedDenomSeq&, const BoundedDenomSeq&);

private:
    Int denominator_;
    std::vector<Int> prefix_;
    IntPolynomial poly_;
};

/// Outcome of the regularity check: a quasi-inverse (x*y*x = x, y*x*y = y
/// pointwise), or witness indices where the reduced denominator of 1/x_n
/// exceeds 10, 10^2, ..., 10^6 with strictly increasing denominators.
struct RegularityVerdict {
    std::optional<BoundedDenomSeq> quasi_inverse;
    std::vector<int64_t> witness_indices;
    bool regular() const { return quasi_inverse.has_value(); }
};

RegularityVerdict regularity_check(const BoundedDenomSeq& x);

/// True when x is eventually constant, i.e. lies in the image of the direct
/// limit of the finite-rank subrings.
bool limit_member(const BoundedDenomSeq& x);

}  // namespace purering

#endif
