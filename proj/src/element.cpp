#include "purering/element.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace purering {

namespace {

// Coordinate of a raw triple; requires totality (denominator primes fixed).
int64_t raw_coordinate(const PrimePartition& partition, const std::vector<Rat>& tails,
                       const std::map<int64_t, int64_t>& fixes, int64_t p) {
    auto it = fixes.find(p);
    if (it != fixes.end()) return it->second;
    return reduce_rational(tails[static_cast<size_t>(partition.block_of(p))], p).value;
}

std::vector<int64_t> divisors_ascending(int64_t m) {
    std::vector<int64_t> divs;
    for (int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        divs.push_back(d);
        if (d != m / d) divs.push_back(m / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

TailedElement canonicalize_element(const PrimePartition& partition,
                                   const std::vector<Rat>& tails,
                                   const std::map<int64_t, int64_t>& fixes) {
    if (tails.size() != static_cast<size_t>(partition.block_count()))
        throw std::invalid_argument("element: one tail per partition block required");

    const int64_t m = partition.modulus();
    std::vector<int64_t> units = units_mod(m);

    // Tail value per unit residue of the current modulus.
    auto value_at = [&](int64_t u) -> const Rat& {
        return tails[static_cast<size_t>(partition.class_block(u))];
    };

    // Minimal modulus the tail function factors through.
    int64_t minimal = m;
    for (int64_t d : divisors_ascending(m)) {
        if (d == m) break;
        std::vector<const Rat*> seen(static_cast<size_t>(d), nullptr);
        bool factors = true;
        for (int64_t u : units) {
            const Rat& v = value_at(u);
            const Rat*& slot = seen[static_cast<size_t>(u % d)];
            if (slot == nullptr) slot = &v;
            else if (*slot != v) { factors = false; break; }
        }
        if (factors) { minimal = d; break; }
    }

    // Blocks are the tail level sets, labelled by first appearance over
    // ascending unit residues of the minimal modulus.
    std::map<int64_t, Rat> value_of_unit;  // residue mod minimal -> tail value
    for (int64_t u : units) value_of_unit.try_emplace(u % minimal, value_at(u));

    std::vector<Rat> new_tails;
    std::map<int64_t, BlockId> class_blocks;
    for (const auto& [w, v] : value_of_unit) {
        BlockId b = -1;
        for (size_t i = 0; i < new_tails.size(); ++i)
            if (new_tails[i] == v) { b = static_cast<BlockId>(i); break; }
        if (b == -1) {
            b = static_cast<BlockId>(new_tails.size());
            new_tails.push_back(v);
        }
        class_blocks[w] = b;
    }

    std::map<int64_t, BlockId> exceptions;  // mandatory entries only
    if (minimal > 1)
        for (int64_t p : prime_divisors(Int(minimal))) exceptions[p] = 0;

    PrimePartition new_partition =
        PrimePartition::from_parts(minimal, class_blocks, exceptions);

    // Only previously special primes can deviate from the new prescription.
    std::set<int64_t> candidates;
    for (const auto& [p, v] : fixes) candidates.insert(p);
    for (const auto& [p, b] : partition.exceptions()) candidates.insert(p);
    for (const auto& [p, b] : new_partition.exceptions()) candidates.insert(p);

    std::map<int64_t, int64_t> new_fixes;
    for (int64_t p : candidates) {
        int64_t value = raw_coordinate(partition, tails, fixes, p);
        const Rat& tail = new_tails[static_cast<size_t>(new_partition.block_of(p))];
        if (divides_denominator(tail, p) || reduce_rational(tail, p).value != value)
            new_fixes[p] = value;
    }

    TailedElement result;
    result.partition_ = std::move(new_partition);
    result.tails_ = std::move(new_tails);
    result.fixes_ = std::move(new_fixes);
    return result;
}

TailedElement::TailedElement() : partition_(), tails_{Rat(0)}, fixes_{} {}

TailedElement TailedElement::constant(const Rat& value) {
    return from_rational_vector(PrimePartition::trivial(), {value});
}

TailedElement TailedElement::from_rational_vector(const PrimePartition& partition,
                                                  const std::vector<Rat>& tails,
                                                  const std::map<int64_t, int64_t>& fixes) {
    if (tails.size() != static_cast<size_t>(partition.block_count()))
        throw std::invalid_argument("element: one tail per partition block required");
    std::map<int64_t, int64_t> full = fixes;
    for (const auto& [p, v] : full) {
        if (!is_prime(p))
            throw std::invalid_argument("element: fix key " + std::to_string(p) +
                                        " is not prime");
        if (v < 0 || v >= p)
            throw std::invalid_argument("element: fix value out of range at prime " +
                                        std::to_string(p));
    }
    // Primes dividing the denominator of the tail at their own block default
    // their dead coordinate to 0.
    for (const Rat& t : tails) {
        Int den(t.get_den());
        if (den == 1) continue;
        for (int64_t p : prime_divisors(den))
            if (divides_denominator(tails[static_cast<size_t>(partition.block_of(p))], p))
                full.try_emplace(p, 0);
    }
    return canonicalize_element(partition, tails, full);
}

Residue TailedElement::coordinate(int64_t prime) const {
    return Residue{prime, raw_coordinate(partition_, tails_, fixes_, prime)};
}

bool TailedElement::is_zero() const {
    return tails_.size() == 1 && tails_[0] == 0 && fixes_.empty();
}

bool TailedElement::is_one() const {
    return tails_.size() == 1 && tails_[0] == 1 && fixes_.empty();
}

bool TailedElement::is_idempotent() const {
    for (const Rat& t : tails_)
        if (t != 0 && t != 1) return false;
    for (const auto& [p, v] : fixes_)
        if (v != 0 && v != 1) return false;
    return true;
}

TorsionOrder TailedElement::torsion_order() const {
    for (const Rat& t : tails_)
        if (t != 0) return TorsionOrder::infinite();
    Int order = 1;
    for (const auto& [p, v] : fixes_)
        if (v != 0) order *= p;
    return TorsionOrder::finite(order);
}

namespace {

enum class Op { Add, Mul };

TailedElement combine(const TailedElement& x, const TailedElement& y, Op op) {
    Refinement ref = refine(x.partition(), y.partition());

    std::vector<Rat> tails(static_cast<size_t>(ref.common.block_count()));
    for (size_t b = 0; b < tails.size(); ++b) {
        const Rat& xt = x.tails()[static_cast<size_t>(ref.left_of_block[b])];
        const Rat& yt = y.tails()[static_cast<size_t>(ref.right_of_block[b])];
        tails[b] = op == Op::Add ? Rat(xt + yt) : Rat(xt * yt);
    }

    // Every special prime is pinned from the operands' true coordinates, so
    // the result is exact regardless of how the refinement labelled it.
    std::set<int64_t> special;
    for (const auto& [p, v] : x.fixes()) special.insert(p);
    for (const auto& [p, v] : y.fixes()) special.insert(p);
    for (const auto& [p, b] : ref.common.exceptions()) special.insert(p);
    for (const auto& [p, pr] : ref.dissolved) special.insert(p);
    for (const Rat& t : tails) {
        Int den(t.get_den());
        if (den != 1)
            for (int64_t p : prime_divisors(den)) special.insert(p);
    }

    std::map<int64_t, int64_t> fixes;
    for (int64_t p : special) {
        int64_t xv = x.coordinate(p).value;
        int64_t yv = y.coordinate(p).value;
        fixes[p] = op == Op::Add ? (xv + yv) % p : mul_mod(xv, yv, p);
    }
    return canonicalize_element(ref.common, tails, fixes);
}

}  // namespace

TailedElement operator+(const TailedElement& x, const TailedElement& y) {
    return combine(x, y, Op::Add);
}

TailedElement operator*(const TailedElement& x, const TailedElement& y) {
    return combine(x, y, Op::Mul);
}

TailedElement operator*(const Int& scalar, const TailedElement& x) {
    std::vector<Rat> tails(x.tails().size());
    for (size_t b = 0; b < tails.size(); ++b) tails[b] = Rat(scalar) * x.tails()[b];
    std::map<int64_t, int64_t> fixes;
    for (const auto& [p, v] : x.fixes()) fixes[p] = mul_mod(mod_reduce(scalar, p), v, p);
    return canonicalize_element(x.partition(), tails, fixes);
}

}  // namespace purering
