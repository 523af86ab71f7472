/**
 * @file structure.hpp
 * @brief Multiplicative structure of the representable ring: quasi-inverses
 *        (regularity witnesses), units, minimal annihilating polynomials over
 *        the integers, and integrality certificates.
 */
#ifndef PURERING_STRUCTURE_HPP
#define PURERING_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purering/element.hpp"

namespace purering {

/// Integer polynomial, constant coefficient first. Canonical form is
/// primitive (content 1) with positive leading coefficient; the zero
/// polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);

    /// c1 * X + c0
    static IntPolynomial linear(Int c0, Int c1);
    static IntPolynomial identity() { return linear(0, 1); }  // X

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    bool is_monic() const { return !is_zero() && coefficients_.back() == 1; }
    const std::vector<Int>& coefficients() const { return coefficients_; }

    Rat eval(const Rat& value) const;
    Int eval(const Int& value) const;
    int64_t eval_mod(int64_t value, int64_t p) const;

    Int content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;

    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const Int&, const IntPolynomial&);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Int> coefficients_;
    void trim();
};

/// The element y with x*y*x = x and y*x*y = y, obtained by inverting every
/// nonzero coordinate. Always defined on the representable ring.
TailedElement quasi_inverse(const TailedElement& x);

/// True when every coordinate is nonzero.
bool is_unit(const TailedElement& x);

/// Coordinatewise inverse of a unit, or the smallest prime with a zero
/// coordinate when x is not a unit.
struct UnitInverse {
    std::optional<TailedElement> inverse;
    int64_t zero_prime = 0;
    bool ok() const { return inverse.has_value(); }
};
UnitInverse unit_inverse(const TailedElement& x);

/// Minimal-degree primitive integer polynomial annihilating x in the product
/// ring (X for the zero element). Built from one linear factor per distinct
/// tail value plus the smallest set of monic factors covering the fixes.
IntPolynomial annihilator(const TailedElement& x);

/// Symbolic check that f vanishes at x: f(tail) = 0 in Q for every tail and
/// f(fix) = 0 mod p for every fix. Never decided by sampling.
bool annihilates(const IntPolynomial& f, const TailedElement& x);

/// Integrality over the integers. Integral elements carry a verified monic
/// witness; non-integral ones cite a non-integer tail value together with the
/// denominator obstruction: a monic relation would force the value to be a
/// rational root of a monic integer polynomial, impossible off Z.
struct IntegralityCertificate {
    bool integral = false;
    IntPolynomial witness;     // monic annihilator, when integral
    BlockId block = -1;        // offending block, when not
    Rat tail_value;            // its non-integer tail
    Int obstruction_prime;     // smallest prime factor of the denominator
    std::string argument;      // human-readable denominator/parity argument
};
IntegralityCertificate is_integral(const TailedElement& x);

}  // namespace purering

#endif
