#pragma once

// Matrix mortality for pools of tropical adjacency matrices: does some finite
// product of pool members equal the all-zero matrix? For these matrices the
// answer is decided by joint strong connectivity of the dependency graphs.

#include "maxcon/tropical.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace maxcon {

struct MortalityResult {
    bool mortal = false;
    std::vector<std::size_t> witness;  // 0-based pool indices; empty when not mortal
    std::optional<std::size_t> witness_length;
};

// Left-to-right product A_{i_1} A_{i_2} ... A_{i_n}; throws on an empty sequence.
AdjMatrix sequence_product(std::span<const AdjMatrix> pool, std::span<const std::size_t> sequence);

bool is_mortal(std::span<const AdjMatrix> pool);

// Same truth value as is_mortal: whether the semigroup generated by the pool contains 0.
bool semigroup_contains_zero(std::span<const AdjMatrix> pool);

// Witness (0, 1, ..., m-1) repeated r times, r the least power making the
// round-robin product zero. The product is re-verified before returning.
MortalityResult mortality_witness(std::span<const AdjMatrix> pool);

// Exhaustive search over all sequences of length 1..max_len, shorter first
// then lexicographic; returns the first whose product is zero. Prefixes whose
// product repeats an earlier prefix's are skipped, which cannot change the answer.
std::optional<std::vector<std::size_t>> brute_force_mortality(std::span<const AdjMatrix> pool, std::size_t max_len);

}  // namespace maxcon
