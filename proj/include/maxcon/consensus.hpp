#pragma once

/**
 * Max-consensus protocol: x_i(k+1) = max over in-neighbours j of x_j(k).
 *
 * With A the tropical adjacency matrix this is x(k+1) = A x(k), so a fixed
 * topology gives x(k) = A^k x(0) and a switching topology gives
 * x(k) = A_{k-1} ... A_0 x(0). Consensus for every initial condition holds
 * exactly when the relevant product reaches the all-zero matrix.
 */

#include "maxcon/graph.hpp"
#include "maxcon/random.hpp"
#include "maxcon/tropical.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxcon {

struct Trace {
    std::vector<StateVector> states;        // states[k] = x(k)
    std::optional<std::size_t> converged_at;  // first k with all components equal
    std::vector<std::size_t> applied;       // pool indices per step; empty for a fixed topology
    std::string description;
};

enum class VerdictReason { strongly_connected, not_strongly_connected, product_reached_zero, bound_exhausted };

std::string to_string(VerdictReason r);

struct ConvergenceVerdict {
    bool converges_for_all_inits = false;
    std::optional<std::size_t> steps;
    VerdictReason reason = VerdictReason::bound_exhausted;
};

// A pool of matrices and the order in which they are applied (0-based indices).
struct SwitchingSchedule {
    std::vector<AdjMatrix> pool;
    std::vector<std::size_t> sequence;

    // Throws DimensionError / std::out_of_range on inconsistent input.
    void validate() const;
    std::size_t dimension() const;
};

// One synchronous round, algebraic form (A x).
StateVector step(const AdjMatrix& a, std::span<const ExtendedReal> x);
// One synchronous round computed from in-neighbour sets.
StateVector step(const Digraph& g, std::span<const ExtendedReal> x);

// Iterates until consensus or max_steps rounds. x0 must be finite.
Trace run_fixed(const AdjMatrix& a, const StateVector& x0, std::size_t max_steps);

// Applies every scheduled matrix in order; the trace has sequence.size() + 1 states.
Trace run_switching(const SwitchingSchedule& schedule, const StateVector& x0);

// A_{i_n} ... A_{i_1}: the matrix taking x(0) to the final state.
AdjMatrix schedule_product(const SwitchingSchedule& schedule);

ConvergenceVerdict converges_all_inits_fixed(const AdjMatrix& a);
// First prefix of the schedule whose product is all-zero, if any.
ConvergenceVerdict converges_all_inits_switching(const SwitchingSchedule& schedule);

// Smallest k >= 1 with A^k all-zero; nullopt when the graph is not strongly connected.
std::optional<std::size_t> min_zero_exponent(const AdjMatrix& a);

// Consensus round for this particular x0 under a fixed topology: the
// smallest k such that every node is within k hops of some maximising node.
// -inf components are allowed.
std::optional<std::size_t> converges_for_init(const AdjMatrix& a, std::span<const ExtendedReal> x0);

// A random permutation of 1..n; when argmax is given, the value n is placed there.
StateVector distinct_initial_values(std::size_t n, Rng& rng, std::optional<Node> argmax = std::nullopt);

struct FaultReport {
    bool fault = false;
    std::size_t trials = 0;
    std::size_t failed_trials = 0;
    std::optional<std::size_t> first_failed_trial;
    std::optional<Node> first_failed_argmax;
};

// Runs `trials` protocols for expected_steps rounds each. Trial t starts
// from distinct values with the maximum at node t mod n, so any trials >= n
// covers every placement of the maximum. Deterministic in `seed`.
FaultReport fault_check(const AdjMatrix& a, std::size_t expected_steps, std::size_t trials, std::uint64_t seed);

// "k v_1 ... v_n" per state.
std::string format_trace(const Trace& trace);

}  // namespace maxcon
