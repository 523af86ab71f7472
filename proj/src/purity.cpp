#include "purering/purity.hpp"

#include <map>
#include <stdexcept>

namespace purering {

LatticeSpec LatticeSpec::full(PrimePartition partition) {
    LatticeSpec spec;
    spec.partition_ = std::move(partition);
    spec.kind_ = LatticeKind::Full;
    return spec;
}

LatticeSpec LatticeSpec::ideal(PrimePartition partition, std::set<BlockId> blocks) {
    if (blocks.empty()) throw std::invalid_argument("lattice: ideal support must be nonempty");
    for (BlockId b : blocks)
        if (b < 0 || b >= partition.block_count())
            throw std::invalid_argument("lattice: ideal block out of range");
    LatticeSpec spec;
    spec.partition_ = std::move(partition);
    spec.kind_ = LatticeKind::Ideal;
    spec.ideal_blocks_ = std::move(blocks);
    return spec;
}

Int minimal_multiplier(const TailedElement& x) {
    Int k = 1;
    for (const Rat& t : x.tails()) k = lcm(k, Int(t.get_den()));
    return k;
}

bool is_member(const TailedElement& x, const LatticeSpec& lattice) {
    Refinement ref = refine(x.partition(), lattice.partition());
    // One tail value per lattice block; scaling by k preserves (in)equality,
    // so constancy decides membership outright.
    std::map<BlockId, Rat> seen;
    for (BlockId b = 0; b < ref.common.block_count(); ++b) {
        const Rat& value = x.tails()[static_cast<size_t>(ref.left_of_block[b])];
        BlockId target = ref.right_of_block[static_cast<size_t>(b)];
        if (lattice.kind() == LatticeKind::Ideal && !lattice.ideal_blocks().count(target)) {
            if (value != 0) return false;
            continue;
        }
        auto [it, inserted] = seen.emplace(target, value);
        if (!inserted && it->second != value) return false;
    }
    return true;
}

DivisionResult divide_exact(const TailedElement& x, const Int& n) {
    if (n < 1) throw std::invalid_argument("divide_exact: n must be positive");
    if (n == 1) return DivisionResult{x, 0};

    std::vector<int64_t> primes = prime_divisors(n);
    for (int64_t p : primes)
        if (x.coordinate(p).value != 0) return DivisionResult{std::nullopt, p};

    std::vector<Rat> tails(x.tails().size());
    for (size_t b = 0; b < tails.size(); ++b) tails[b] = x.tails()[b] / Rat(n);

    std::map<int64_t, int64_t> fixes;
    for (const auto& [p, v] : x.fixes()) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        fixes[p] = mul_mod(v, inverse_mod(mod_reduce(n, p), p), p);
    }
    for (int64_t p : primes) fixes[p] = 0;  // canonical dead coordinate

    return DivisionResult{canonicalize_element(x.partition(), tails, fixes), 0};
}

Splitting split_at(const TailedElement& x, int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("split_at: modulus must be prime");
    int64_t c = x.coordinate(p).value;
    TailedElement torsion = TailedElement::from_rational_vector(
        PrimePartition::trivial(), {Rat(0)}, {{p, c}});
    DivisionResult rest = divide_exact(x - torsion, Int(p));
    // x - torsion vanishes at p, so the division cannot fail.
    return Splitting{std::move(torsion), std::move(*rest.quotient)};
}

QuotientElement::QuotientElement() : partition_(), values_{Rat(0)} {}

QuotientElement QuotientElement::constant(const Rat& value) {
    QuotientElement q;
    q.values_ = {value};
    return q;
}

QuotientElement QuotientElement::from_parts(const PrimePartition& partition,
                                            const std::vector<Rat>& values) {
    if (values.size() != static_cast<size_t>(partition.block_count()))
        throw std::invalid_argument("quotient: one value per partition block required");
    // A quotient element is exactly the tail part of an element: run the step
    // function through the element canonicalizer (dead coordinates fixed to
    // 0) and read it back.
    std::map<int64_t, int64_t> fixes;
    for (const Rat& v : values) {
        Int den(v.get_den());
        if (den == 1) continue;
        for (int64_t p : prime_divisors(den))
            if (divides_denominator(values[static_cast<size_t>(partition.block_of(p))], p))
                fixes.try_emplace(p, 0);
    }
    TailedElement canonical = canonicalize_element(partition, values, fixes);
    QuotientElement q;
    q.partition_ = canonical.partition();
    q.values_ = canonical.tails();
    return q;
}

bool QuotientElement::is_zero() const {
    return values_.size() == 1 && values_[0] == 0;
}

namespace {

QuotientElement combine(const QuotientElement& x, const QuotientElement& y, bool add) {
    Refinement ref = refine(x.partition(), y.partition());
    std::vector<Rat> values(static_cast<size_t>(ref.common.block_count()));
    for (size_t b = 0; b < values.size(); ++b) {
        const Rat& xv = x.values()[static_cast<size_t>(ref.left_of_block[b])];
        const Rat& yv = y.values()[static_cast<size_t>(ref.right_of_block[b])];
        values[b] = add ? Rat(xv + yv) : Rat(xv * yv);
    }
    return QuotientElement::from_parts(ref.common, values);
}

}  // namespace

QuotientElement operator+(const QuotientElement& x, const QuotientElement& y) {
    return combine(x, y, true);
}

QuotientElement operator*(const QuotientElement& x, const QuotientElement& y) {
    return combine(x, y, false);
}

QuotientElement quotient_map(const TailedElement& x) {
    return QuotientElement::from_parts(x.partition(), x.tails());
}

QuotientElement divide_scalar(const QuotientElement& q, const Int& k) {
    if (k < 1) throw std::invalid_argument("divide_scalar: k must be positive");
    std::vector<Rat> values(q.values().size());
    for (size_t b = 0; b < values.size(); ++b) values[b] = q.values()[b] / Rat(k);
    return QuotientElement::from_parts(q.partition(), values);
}

}  // namespace purering
