#include "purering/omega.hpp"

#include <algorithm>
#include <stdexcept>

namespace purering {

BoundedDenomSeq::BoundedDenomSeq() : denominator_(1), prefix_{}, poly_() {}

BoundedDenomSeq::BoundedDenomSeq(Int denominator, std::vector<Int> prefix, IntPolynomial poly)
    : denominator_(std::move(denominator)),
      prefix_(std::move(prefix)),
      poly_(std::move(poly)) {
    if (denominator_ < 1) throw std::invalid_argument("sequence: denominator must be >= 1");
}

Int BoundedDenomSeq::numerator(int64_t n) const {
    if (n < 1) throw std::invalid_argument("sequence: indices start at 1");
    if (n <= static_cast<int64_t>(prefix_.size())) return prefix_[static_cast<size_t>(n - 1)];
    return poly_.eval(Int(n));
}

Rat BoundedDenomSeq::term(int64_t n) const { return make_rat(numerator(n), denominator_); }

BoundedDenomSeq operator+(const BoundedDenomSeq& x, const BoundedDenomSeq& y) {
    Int k = lcm(x.denominator_, y.denominator_);
    Int sx = k / x.denominator_, sy = k / y.denominator_;
    size_t len = std::max(x.prefix_.size(), y.prefix_.size());
    std::vector<Int> prefix(len);
    for (size_t i = 0; i < len; ++i) {
        int64_t n = static_cast<int64_t>(i) + 1;
        prefix[i] = sx * x.numerator(n) + sy * y.numerator(n);
    }
    return BoundedDenomSeq(k, std::move(prefix), sx * x.poly_ + sy * y.poly_);
}

BoundedDenomSeq operator*(const BoundedDenomSeq& x, const BoundedDenomSeq& y) {
    Int k = x.denominator_ * y.denominator_;
    size_t len = std::max(x.prefix_.size(), y.prefix_.size());
    std::vector<Int> prefix(len);
    for (size_t i = 0; i < len; ++i) {
        int64_t n = static_cast<int64_t>(i) + 1;
        prefix[i] = x.numerator(n) * y.numerator(n);
    }
    return BoundedDenomSeq(k, std::move(prefix), x.poly_ * y.poly_);
}

BoundedDenomSeq operator-(const BoundedDenomSeq& x) {
    std::vector<Int> prefix(x.prefix_.size());
    for (size_t i = 0; i < prefix.size(); ++i) prefix[i] = -x.prefix_[i];
    return BoundedDenomSeq(x.denominator_, std::move(prefix), Int(-1) * x.poly_);
}

bool operator==(const BoundedDenomSeq& x, const BoundedDenomSeq& y) {
    size_t len = std::max(x.prefix_.size(), y.prefix_.size());
    for (size_t i = 0; i < len; ++i) {
        int64_t n = static_cast<int64_t>(i) + 1;
        if (x.numerator(n) * y.denominator_ != y.numerator(n) * x.denominator_) return false;
    }
    return y.denominator_ * x.poly_ == x.denominator_ * y.poly_;
}

bool limit_member(const BoundedDenomSeq& x) { return x.poly().degree() <= 0; }

RegularityVerdict regularity_check(const BoundedDenomSeq& x) {
    if (limit_member(x)) {
        // Finitely many distinct values: invert each one pointwise.
        Rat eventual = x.poly().is_zero()
                           ? Rat(0)
                           : make_rat(x.poly().coefficients()[0], x.denominator());
        Rat inv_eventual = eventual == 0 ? Rat(0) : Rat(1 / eventual);
        std::vector<Rat> inverses(x.prefix().size());
        Int k(inv_eventual.get_den());
        for (size_t i = 0; i < inverses.size(); ++i) {
            Rat t = x.term(static_cast<int64_t>(i) + 1);
            inverses[i] = t == 0 ? Rat(0) : Rat(1 / t);
            k = lcm(k, Int(inverses[i].get_den()));
        }
        std::vector<Int> prefix(inverses.size());
        for (size_t i = 0; i < prefix.size(); ++i)
            prefix[i] = Int(inverses[i].get_num()) * (k / Int(inverses[i].get_den()));
        Int eventual_num = Int(inv_eventual.get_num()) * (k / Int(inv_eventual.get_den()));
        return RegularityVerdict{
            BoundedDenomSeq(k, std::move(prefix), IntPolynomial({eventual_num})), {}};
    }

    // |poly(n)| grows without bound, so the reduced denominator of 1/x_n does
    // too; report the first index past each decade bound, strictly increasing.
    RegularityVerdict verdict;
    Int last_den = 0;
    Int bound = 10;
    int64_t n = 1;
    for (int decade = 1; decade <= 6; ++decade, bound *= 10) {
        for (;; ++n) {
            Int num = x.numerator(n);
            if (num == 0) continue;
            Int reduced = abs(num) / gcd(num, x.denominator());
            if (reduced > bound && reduced > last_den) {
                verdict.witness_indices.push_back(n);
                last_den = reduced;
                ++n;
                break;
            }
        }
    }
    return verdict;
}

}  // namespace purering
