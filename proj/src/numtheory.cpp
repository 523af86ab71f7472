#include "purering/numtheory.hpp"

#include <algorithm>

namespace purering {

namespace {

constexpr int64_t kTrialBound = 1'000'000;

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
    int64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin(int64_t n, int64_t witness) {
    int64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    int64_t x = pow_mod(witness % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

ZeroNotInvertible::ZeroNotInvertible(int64_t p)
    : std::domain_error("zero residue has no inverse mod " + std::to_string(p)), prime(p) {}

DenominatorDivisible::DenominatorDivisible(const Rat& q, int64_t p)
    : std::domain_error("prime " + std::to_string(p) + " divides the denominator of " +
                        q.get_str()),
      prime(p) {}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic for every 64-bit integer with this witness set.
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<int64_t> primes_up_to(int64_t bound) {
    std::vector<int64_t> primes;
    if (bound < 2) return primes;
    if (bound > 100'000'000)
        throw std::invalid_argument("primes_up_to: bound beyond supported range");
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (int64_t j = i * i; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return primes;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

int64_t mod_reduce(const Int& a, int64_t m) {
    return static_cast<int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t inverse_mod(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw ZeroNotInvertible(p);
    // Extended Euclid, coefficients reduced mod p each step.
    int64_t old_r = p, r = a;
    int64_t old_s = 0, s = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t next_r = old_r - q * r;
        int64_t next_s = (old_s - static_cast<int64_t>(static_cast<__int128>(q) * s % p)) % p;
        old_r = r;
        r = next_r;
        old_s = s;
        s = next_s;
    }
    return old_s < 0 ? old_s + p : old_s;
}

Residue mod_inverse(Residue a) {
    if (a.value == 0) throw ZeroNotInvertible(a.modulus);
    return Residue{a.modulus, inverse_mod(a.value, a.modulus)};
}

Residue reduce_rational(const Rat& q, int64_t p) {
    int64_t den = mod_reduce(Int(q.get_den()), p);
    if (den == 0) throw DenominatorDivisible(q, p);
    int64_t num = mod_reduce(Int(q.get_num()), p);
    return Residue{p, mul_mod(num, inverse_mod(den, p), p)};
}

bool divides_denominator(const Rat& q, int64_t p) {
    return mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

std::vector<std::pair<int64_t, int>> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Int rest = abs(n);
    std::vector<std::pair<int64_t, int>> factors;
    for (int64_t p = 2; p <= kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
            ++e;
        }
        factors.emplace_back(p, e);
        if (rest == 1) break;
        // Cofactor below the square of the trial bound is prime once trial division passes it.
        if (p > 1 && rest > 1 && rest < Int(p) * Int(p)) break;
    }
    if (rest > 1) {
        if (!rest.fits_slong_p())
            throw std::invalid_argument("factorize: prime factor exceeds supported range");
        int64_t cofactor = rest.get_si();
        if (!is_prime(cofactor))
            throw std::invalid_argument("factorize: composite cofactor beyond trial bound");
        factors.emplace_back(cofactor, 1);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<int64_t> prime_divisors(const Int& n) {
    std::vector<int64_t> primes;
    for (const auto& [p, e] : factorize(n)) primes.push_back(p);
    return primes;
}

}  // namespace purering
