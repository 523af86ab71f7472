#include "purering/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace purering {

namespace {

constexpr int64_t kMaxModulus = 1'000'000;

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

std::vector<int64_t> units_mod(int64_t m) {
    if (m == 1) return {0};
    std::vector<int64_t> units;
    for (int64_t r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1) units.push_back(r);
    return units;
}

PrimePartition::PrimePartition()
    : modulus_(1), class_map_{0}, exceptions_{}, block_count_(1) {}

PrimePartition PrimePartition::from_parts(int64_t modulus,
                                          const std::map<int64_t, BlockId>& unit_class_blocks,
                                          const std::map<int64_t, BlockId>& exceptions) {
    if (modulus < 1) throw std::invalid_argument("partition: modulus must be >= 1");
    if (modulus > kMaxModulus)
        throw std::invalid_argument("partition: modulus beyond supported range");

    // Every unit residue labelled, labels contiguous 0..n-1.
    std::vector<int64_t> units = units_mod(modulus);
    std::vector<BlockId> class_map(static_cast<size_t>(modulus), -1);
    std::set<BlockId> used;
    for (int64_t u : units) {
        auto it = unit_class_blocks.find(u);
        if (it == unit_class_blocks.end())
            throw std::invalid_argument("partition: residue " + std::to_string(u) +
                                        " not assigned a block");
        if (it->second < 0) throw std::invalid_argument("partition: negative block id");
        class_map[static_cast<size_t>(u)] = it->second;
        used.insert(it->second);
    }
    for (const auto& [r, b] : unit_class_blocks)
        if (r < 0 || r >= modulus || class_map[static_cast<size_t>(r)] == -1)
            throw std::invalid_argument("partition: residue " + std::to_string(r) +
                                        " is not a unit mod " + std::to_string(modulus));
    int block_count = static_cast<int>(used.size());
    for (int b = 0; b < block_count; ++b)
        if (!used.count(b))
            throw std::invalid_argument("partition: block ids must form a contiguous range");

    std::map<int64_t, BlockId> exc = exceptions;
    for (const auto& [p, b] : exc) {
        if (!is_prime(p))
            throw std::invalid_argument("partition: exception key " + std::to_string(p) +
                                        " is not prime");
        if (b < 0 || b >= block_count)
            throw std::invalid_argument("partition: exception block out of range");
    }
    if (modulus > 1)
        for (int64_t p : prime_divisors(Int(modulus)))
            exc.try_emplace(p, 0);

    // Minimal modulus: smallest divisor the class labelling factors through.
    int64_t minimal = modulus;
    for (int64_t d : divisors_ascending(modulus)) {
        if (d == modulus) break;
        std::vector<BlockId> seen(static_cast<size_t>(d), -1);
        bool factors = true;
        for (int64_t u : units) {
            BlockId& slot = seen[static_cast<size_t>(u % d)];
            BlockId b = class_map[static_cast<size_t>(u)];
            if (slot == -1) slot = b;
            else if (slot != b) { factors = false; break; }
        }
        if (factors) { minimal = d; break; }
    }

    PrimePartition result;
    result.modulus_ = minimal;
    result.block_count_ = block_count;
    result.class_map_.assign(static_cast<size_t>(minimal), -1);
    if (minimal == 1) {
        result.class_map_[0] = class_map[static_cast<size_t>(units[0])];
    } else {
        for (int64_t u : units) result.class_map_[static_cast<size_t>(u % minimal)] =
            class_map[static_cast<size_t>(u)];
    }
    // Exceptions survive only where they disagree with the (coarsened) class.
    for (const auto& [p, b] : exc) {
        if (minimal > 1 && minimal % p == 0) {
            result.exceptions_[p] = b;
        } else if (result.class_map_[static_cast<size_t>(p % minimal)] != b) {
            result.exceptions_[p] = b;
        }
    }
    return result;
}

BlockId PrimePartition::block_of(int64_t prime) const {
    auto it = exceptions_.find(prime);
    if (it != exceptions_.end()) return it->second;
    return class_map_[static_cast<size_t>(prime % modulus_)];
}

BlockId PrimePartition::class_block(int64_t residue) const {
    BlockId b = class_map_[static_cast<size_t>(residue % modulus_)];
    if (b < 0) throw std::invalid_argument("class_block: residue not a unit");
    return b;
}

std::vector<int64_t> PrimePartition::unit_residues() const { return units_mod(modulus_); }

BlockId Refinement::left_block_of(int64_t prime) const {
    auto it = dissolved.find(prime);
    if (it != dissolved.end()) return it->second.first;
    return left_of_block[static_cast<size_t>(common.block_of(prime))];
}

BlockId Refinement::right_block_of(int64_t prime) const {
    auto it = dissolved.find(prime);
    if (it != dissolved.end()) return it->second.second;
    return right_of_block[static_cast<size_t>(common.block_of(prime))];
}

Refinement refine(const PrimePartition& left, const PrimePartition& right) {
    int64_t m = std::lcm(left.modulus(), right.modulus());
    if (m > kMaxModulus)
        throw std::invalid_argument("refine: common modulus beyond supported range");

    // Pairs realized by unit classes become blocks, in lexicographic order.
    std::map<std::pair<BlockId, BlockId>, BlockId> pair_block;
    std::map<int64_t, std::pair<BlockId, BlockId>> pair_of_unit;
    for (int64_t u : units_mod(m)) {
        std::pair<BlockId, BlockId> pr{left.class_block(u % left.modulus()),
                                       right.class_block(u % right.modulus())};
        pair_of_unit[u] = pr;
        pair_block.emplace(pr, 0);
    }
    BlockId next = 0;
    for (auto& [pr, id] : pair_block) id = next++;

    std::map<int64_t, BlockId> class_blocks;
    for (const auto& [u, pr] : pair_of_unit) class_blocks[u] = pair_block[pr];

    std::set<int64_t> special;
    if (m > 1)
        for (int64_t p : prime_divisors(Int(m))) special.insert(p);
    for (const auto& [p, b] : left.exceptions()) special.insert(p);
    for (const auto& [p, b] : right.exceptions()) special.insert(p);

    std::map<int64_t, BlockId> exceptions;
    std::map<int64_t, std::pair<BlockId, BlockId>> dissolved;
    for (int64_t p : special) {
        std::pair<BlockId, BlockId> pr{left.block_of(p), right.block_of(p)};
        auto it = pair_block.find(pr);
        if (it != pair_block.end()) {
            exceptions[p] = it->second;
        } else {
            dissolved[p] = pr;
            if (m % p == 0) exceptions[p] = 0;  // mandatory entry, pair unrealizable
        }
    }

    Refinement result;
    result.common = PrimePartition::from_parts(m, class_blocks, exceptions);
    result.left_of_block.resize(pair_block.size());
    result.right_of_block.resize(pair_block.size());
    for (const auto& [pr, id] : pair_block) {
        result.left_of_block[static_cast<size_t>(id)] = pr.first;
        result.right_of_block[static_cast<size_t>(id)] = pr.second;
    }
    result.dissolved = std::move(dissolved);
    return result;
}

std::vector<PrimePartition> make_chain(int depth) {
    if (depth < 1) throw std::invalid_argument("make_chain: depth must be >= 1");
    std::vector<PrimePartition> chain;
    chain.push_back(PrimePartition::trivial());
    for (int i = 2; i <= depth; ++i) {
        int64_t m = int64_t{1} << i;  // 4, 8, 16, ...
        std::map<int64_t, BlockId> classes;
        BlockId next = 0;
        for (int64_t u : units_mod(m)) classes[u] = next++;
        chain.push_back(PrimePartition::from_parts(m, classes, {{2, 0}}));
    }
    return chain;
}

}  // namespace purering
