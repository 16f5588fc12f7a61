#include "maxcon/mortality.hpp"

#include "maxcon/consensus.hpp"
#include "maxcon/error.hpp"
#include "maxcon/graph.hpp"

#include <set>
#include <stdexcept>

namespace maxcon {

namespace {

void check_pool(std::span<const AdjMatrix> pool) {
    if (pool.empty()) throw std::invalid_argument("matrix pool is empty");
    for (const auto& m : pool)
        if (m.size() != pool.front().size()) throw DimensionError("pool matrices differ in dimension");
}

}  // namespace

AdjMatrix sequence_product(std::span<const AdjMatrix> pool, std::span<const std::size_t> sequence) {
    check_pool(pool);
    if (sequence.empty()) throw std::invalid_argument("sequence_product: empty sequence");
    for (std::size_t idx : sequence)
        if (idx >= pool.size()) throw std::out_of_range("sequence index exceeds pool size");
    AdjMatrix p = pool[sequence.front()];
    for (std::size_t idx : sequence.subspan(1)) p = mat_mul(p, pool[idx]);
    return p;
}

bool is_mortal(std::span<const AdjMatrix> pool) {
    check_pool(pool);
    std::vector<Digraph> graphs;
    graphs.reserve(pool.size());
    for (const auto& m : pool) graphs.push_back(dependency_graph(m));
    return is_jointly_strongly_connected(graphs);
}

bool semigroup_contains_zero(std::span<const AdjMatrix> pool) { return is_mortal(pool); }

MortalityResult mortality_witness(std::span<const AdjMatrix> pool) {
    MortalityResult result;
    if (!is_mortal(pool)) return result;

    std::vector<std::size_t> round(pool.size());
    for (std::size_t r = 0; r < pool.size(); ++r) round[r] = r;
    const AdjMatrix cycle = sequence_product(pool, round);
    const auto power = min_zero_exponent(cycle);
    if (!power) throw std::logic_error("jointly strongly connected pool with a non-nilpotent round-robin product");

    for (std::size_t r = 0; r < *power; ++r) result.witness.insert(result.witness.end(), round.begin(), round.end());
    if (!is_all_zero(sequence_product(pool, result.witness))) {
        throw std::logic_error("mortality witness failed re-verification");
    }
    result.mortal = true;
    result.witness_length = result.witness.size();
    return result;
}

std::optional<std::vector<std::size_t>> brute_force_mortality(std::span<const AdjMatrix> pool, std::size_t max_len) {
    check_pool(pool);
    // Breadth-first over lengths, each level in lexicographic order. A prefix
    // whose product already appeared for an earlier prefix (shorter, or same
    // length and lexicographically smaller) is dropped: every extension of it
    // is matched by an earlier extension of that prefix, so the first zero
    // product in canonical order is unchanged.
    struct Prefix {
        AdjMatrix product;
        std::vector<std::size_t> sequence;
    };
    std::set<AdjMatrix> seen;
    std::vector<Prefix> frontier{Prefix{AdjMatrix::identity(pool.front().size()), {}}};
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Prefix> next;
        for (const auto& prefix : frontier) {
            for (std::size_t r = 0; r < pool.size(); ++r) {
                AdjMatrix product = len == 1 ? pool[r] : mat_mul(prefix.product, pool[r]);
                auto sequence = prefix.sequence;
                sequence.push_back(r);
                if (is_all_zero(product)) return sequence;
                if (seen.insert(product).second) next.push_back(Prefix{std::move(product), std::move(sequence)});
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace maxcon
