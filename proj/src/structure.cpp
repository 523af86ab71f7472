#include "purering/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace purering {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::linear(Int c0, Int c1) {
    return IntPolynomial({std::move(c0), std::move(c1)});
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rat IntPolynomial::eval(const Rat& value) const {
    Rat result(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        result = result * value + Rat(*it);
    return result;
}

Int IntPolynomial::eval(const Int& value) const {
    Int result(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        result = result * value + *it;
    return result;
}

int64_t IntPolynomial::eval_mod(int64_t value, int64_t p) const {
    int64_t result = 0;
    int64_t v = value % p;
    if (v < 0) v += p;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        result = (mul_mod(result, v, p) + mod_reduce(*it, p)) % p;
    return result;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& c : coefficients_) g = gcd(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (coefficients_.back() < 0) g = -g;
    std::vector<Int> scaled(coefficients_.size());
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = coefficients_[i] / g;
    return IntPolynomial(std::move(scaled));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> sum(std::max(a.coefficients_.size(), b.coefficients_.size()), Int(0));
    for (size_t i = 0; i < a.coefficients_.size(); ++i) sum[i] += a.coefficients_[i];
    for (size_t i = 0; i < b.coefficients_.size(); ++i) sum[i] += b.coefficients_[i];
    return IntPolynomial(std::move(sum));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> prod(a.coefficients_.size() + b.coefficients_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coefficients_.size(); ++i)
        for (size_t j = 0; j < b.coefficients_.size(); ++j)
            prod[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return IntPolynomial(std::move(prod));
}

IntPolynomial operator*(const Int& k, const IntPolynomial& a) {
    std::vector<Int> scaled(a.coefficients_.size());
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = k * a.coefficients_[i];
    return IntPolynomial(std::move(scaled));
}

TailedElement quasi_inverse(const TailedElement& x) {
    std::vector<Rat> tails(x.tails().size());
    for (size_t b = 0; b < tails.size(); ++b) {
        const Rat& t = x.tails()[b];
        tails[b] = t == 0 ? Rat(0) : Rat(1 / t);
    }
    std::map<int64_t, int64_t> fixes;
    for (const auto& [p, v] : x.fixes()) fixes[p] = v == 0 ? 0 : inverse_mod(v, p);
    // Primes dividing a tail numerator at their own block are zero
    // coordinates of x; the inverse keeps them at zero.
    for (size_t b = 0; b < x.tails().size(); ++b) {
        Int num(x.tails()[b].get_num());
        if (num == 0 || num == 1 || num == -1) continue;
        for (int64_t p : prime_divisors(num))
            if (x.partition().block_of(p) == static_cast<BlockId>(b))
                fixes.try_emplace(p, 0);
    }
    return canonicalize_element(x.partition(), tails, fixes);
}

namespace {

// Smallest prime assigned to the block but not fixed.
int64_t first_free_prime_in_block(const TailedElement& x, BlockId block) {
    for (int64_t p = 2;; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime(p)) continue;
        if (x.fixes().count(p)) continue;
        if (x.partition().block_of(p) == block) return p;
    }
}

}  // namespace

bool is_unit(const TailedElement& x) {
    for (const Rat& t : x.tails())
        if (t == 0) return false;
    for (const auto& [p, v] : x.fixes())
        if (v == 0) return false;
    for (size_t b = 0; b < x.tails().size(); ++b) {
        Int num(x.tails()[b].get_num());
        if (num == 1 || num == -1) continue;
        for (int64_t p : prime_divisors(num))
            if (x.partition().block_of(p) == static_cast<BlockId>(b) && !x.fixes().count(p))
                return false;
    }
    return true;
}

UnitInverse unit_inverse(const TailedElement& x) {
    if (is_unit(x)) return UnitInverse{quasi_inverse(x), 0};

    int64_t witness = 0;
    auto consider = [&witness](int64_t p) {
        if (witness == 0 || p < witness) witness = p;
    };
    for (const auto& [p, v] : x.fixes())
        if (v == 0) consider(p);
    for (size_t b = 0; b < x.tails().size(); ++b) {
        const Rat& t = x.tails()[b];
        if (t == 0) {
            consider(first_free_prime_in_block(x, static_cast<BlockId>(b)));
            continue;
        }
        Int num(t.get_num());
        if (num == 1 || num == -1) continue;
        for (int64_t p : prime_divisors(num))
            if (x.partition().block_of(p) == static_cast<BlockId>(b) && !x.fixes().count(p))
                consider(p);
    }
    return UnitInverse{std::nullopt, witness};
}

bool annihilates(const IntPolynomial& f, const TailedElement& x) {
    if (f.is_zero()) return false;
    for (const Rat& t : x.tails())
        if (f.eval(t) != 0) return false;
    for (const auto& [p, v] : x.fixes())
        if (f.eval_mod(v, p) != 0) return false;
    return true;
}

IntPolynomial annihilator(const TailedElement& x) {
    // One primitive linear factor per tail value; canonical elements carry
    // pairwise distinct tails, so the product already has distinct roots.
    IntPolynomial base = IntPolynomial({Int(1)});
    for (const Rat& t : x.tails())
        base = base * IntPolynomial::linear(Int(-t.get_num()), Int(t.get_den()));

    // Fixes not annihilated yet need monic cofactors (X - lift). A single
    // lift may cover several fixes; search subsets by size, then order.
    std::vector<std::pair<int64_t, int64_t>> open;
    std::vector<int64_t> lifts;
    for (const auto& [p, v] : x.fixes()) {
        if (base.eval_mod(v, p) == 0) continue;
        open.emplace_back(p, v);
        if (std::find(lifts.begin(), lifts.end(), v) == lifts.end()) lifts.push_back(v);
    }
    if (open.empty()) return base;
    std::sort(lifts.begin(), lifts.end());

    const size_t n = lifts.size();
    std::vector<uint32_t> masks;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (uint32_t mask : masks) {
        IntPolynomial f = base;
        for (size_t i = 0; i < n; ++i)
            if (mask & (uint32_t{1} << i)) f = f * IntPolynomial::linear(Int(-lifts[i]), 1);
        bool covers = true;
        for (const auto& [p, v] : open)
            if (f.eval_mod(v, p) != 0) { covers = false; break; }
        if (covers) return f;
    }
    throw std::logic_error("annihilator: full factor set must cover");  // unreachable
}

IntegralityCertificate is_integral(const TailedElement& x) {
    for (size_t b = 0; b < x.tails().size(); ++b) {
        const Rat& t = x.tails()[b];
        if (t.get_den() == 1) continue;
        IntegralityCertificate cert;
        cert.integral = false;
        cert.block = static_cast<BlockId>(b);
        cert.tail_value = t;
        Int den(t.get_den());
        cert.obstruction_prime = Int(prime_divisors(den).front());
        cert.argument =
            "a monic integer relation f(x) = 0 forces f(" + t.get_str() +
            ") = 0 mod p for infinitely many primes of block " + std::to_string(b) +
            ", hence f(" + t.get_str() + ") = 0 in Q; but " + den.get_str() +
            "^deg(f) * f(" + t.get_str() + ") = " + Int(t.get_num()).get_str() +
            "^deg(f) mod " + cert.obstruction_prime.get_str() +
            ", which is never 0 since the fraction is reduced";
        return cert;
    }
    IntegralityCertificate cert;
    cert.integral = true;
    cert.witness = annihilator(x);
    // Integer tails make every factor monic.
    if (!cert.witness.is_monic())
        throw std::logic_error("is_integral: witness for integer tails must be monic");
    return cert;
}

}  // namespace purering
