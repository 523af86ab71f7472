/**
 * @file numtheory.hpp
 * @brief Exact integer, rational and prime-field primitives shared by every module.
 *
 * All arithmetic is exact: integers and rationals are GMP-backed, residues are
 * certified-prime moduli with values in [0, p). Rationals are kept in lowest
 * terms with positive denominator so equality is structural.
 */
#ifndef PURERING_NUMTHEORY_HPP
#define PURERING_NUMTHEORY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace purering {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when inverting the zero residue.
struct ZeroNotInvertible : std::domain_error {
    explicit ZeroNotInvertible(int64_t p);
    int64_t prime;
};

/// Thrown by reduce_rational when the prime divides the denominator.
struct DenominatorDivisible : std::domain_error {
    DenominatorDivisible(const Rat& q, int64_t p);
    int64_t prime;
};

/// Coordinate value in Z_p: 0 <= value < modulus, modulus prime.
struct Residue {
    int64_t modulus = 2;
    int64_t value = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Deterministic primality: trial division for small n, Miller-Rabin with a
/// witness set proven complete for the full 64-bit range otherwise.
bool is_prime(int64_t n);

/// Ascending primes <= bound; empty when bound < 2.
std::vector<int64_t> primes_up_to(int64_t bound);

/// Rational num/den in lowest terms with positive denominator. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// Representative of a in [0, m) for m >= 1.
int64_t mod_reduce(const Int& a, int64_t m);

/// (a * b) mod m without overflow, 0 <= a, b < m < 2^63.
int64_t mul_mod(int64_t a, int64_t b, int64_t m);

/// Inverse of a modulo prime p; a must be nonzero mod p.
int64_t inverse_mod(int64_t a, int64_t p);

/// Coordinatewise inversion in Z_p. Throws ZeroNotInvertible on a.value == 0.
Residue mod_inverse(Residue a);

/// Image of q in Z_p: numerator * denominator^{-1} mod p.
/// Throws DenominatorDivisible when p divides the denominator of q.
Residue reduce_rational(const Rat& q, int64_t p);

/// True when p divides the denominator of q (i.e. reduce_rational is undefined).
bool divides_denominator(const Rat& q, int64_t p);

/// Prime factorization of |n|, ascending, via trial division up to 10^6 plus a
/// primality-certified cofactor. Throws std::invalid_argument when a composite
/// cofactor beyond the trial bound remains or a factor exceeds the int64 range.
std::vector<std::pair<int64_t, int>> factorize(const Int& n);

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<int64_t> prime_divisors(const Int& n);

}  // namespace purering

#endif
