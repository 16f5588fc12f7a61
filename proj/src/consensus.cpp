#include "maxcon/consensus.hpp"

#include "maxcon/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxcon {

std::string to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::strongly_connected: return "strongly_connected";
        case VerdictReason::not_strongly_connected: return "not_strongly_connected";
        case VerdictReason::product_reached_zero: return "product_reached_zero";
        case VerdictReason::bound_exhausted: return "bound_exhausted";
    }
    return "unknown";
}

void SwitchingSchedule::validate() const {
    if (pool.empty()) throw std::invalid_argument("schedule pool is empty");
    const std::size_t n = pool.front().size();
    for (const auto& m : pool)
        if (m.size() != n) throw DimensionError("schedule pool matrices differ in dimension");
    for (std::size_t idx : sequence) {
        if (idx >= pool.size()) {
            throw std::out_of_range("schedule index " + std::to_string(idx + 1) + " exceeds pool size " +
                                    std::to_string(pool.size()));
        }
    }
}

std::size_t SwitchingSchedule::dimension() const {
    if (pool.empty()) throw std::invalid_argument("schedule pool is empty");
    return pool.front().size();
}

StateVector step(const AdjMatrix& a, std::span<const ExtendedReal> x) { return mat_vec(a, x); }

StateVector step(const Digraph& g, std::span<const ExtendedReal> x) {
    if (g.size() != x.size()) throw DimensionError("step: graph and state differ in size");
    StateVector y(x.size(), kNegInf);
    for (Node i = 0; i < g.size(); ++i)
        for (Node j : g.in_neighbors(i)) y[i] = t_add(y[i], x[j]);
    return y;
}

namespace {

void require_finite(const StateVector& x0) {
    if (!all_finite(x0)) throw std::invalid_argument("initial condition must be finite");
}

}  // namespace

Trace run_fixed(const AdjMatrix& a, const StateVector& x0, std::size_t max_steps) {
    if (a.size() != x0.size()) throw DimensionError("run_fixed: matrix and state differ in size");
    require_finite(x0);
    Trace trace;
    trace.description = "fixed";
    trace.states.push_back(x0);
    if (is_consensus(x0)) {
        trace.converged_at = 0;
        return trace;
    }
    for (std::size_t k = 1; k <= max_steps; ++k) {
        trace.states.push_back(step(a, trace.states.back()));
        if (is_consensus(trace.states.back())) {
            trace.converged_at = k;
            break;
        }
    }
    return trace;
}

Trace run_switching(const SwitchingSchedule& schedule, const StateVector& x0) {
    schedule.validate();
    if (schedule.dimension() != x0.size()) throw DimensionError("run_switching: schedule and state differ in size");
    require_finite(x0);
    Trace trace;
    trace.description = "switching";
    trace.applied = schedule.sequence;
    trace.states.push_back(x0);
    if (is_consensus(x0)) trace.converged_at = 0;
    for (std::size_t idx : schedule.sequence) {
        trace.states.push_back(step(schedule.pool[idx], trace.states.back()));
        if (!trace.converged_at && is_consensus(trace.states.back())) trace.converged_at = trace.states.size() - 1;
    }
    return trace;
}

AdjMatrix schedule_product(const SwitchingSchedule& schedule) {
    schedule.validate();
    AdjMatrix p = AdjMatrix::identity(schedule.dimension());
    for (std::size_t idx : schedule.sequence) p = mat_mul(schedule.pool[idx], p);
    return p;
}

ConvergenceVerdict converges_all_inits_fixed(const AdjMatrix& a) {
    const Digraph g = dependency_graph(a);
    const Diameter d = diameter(g);
    if (!d.is_finite()) return {false, std::nullopt, VerdictReason::not_strongly_connected};
    return {true, d.value, VerdictReason::strongly_connected};
}

ConvergenceVerdict converges_all_inits_switching(const SwitchingSchedule& schedule) {
    schedule.validate();
    AdjMatrix p = AdjMatrix::identity(schedule.dimension());
    if (is_all_zero(p)) return {true, 0, VerdictReason::product_reached_zero};
    for (std::size_t k = 0; k < schedule.sequence.size(); ++k) {
        p = mat_mul(schedule.pool[schedule.sequence[k]], p);
        if (is_all_zero(p)) return {true, k + 1, VerdictReason::product_reached_zero};
    }
    return {false, std::nullopt, VerdictReason::bound_exhausted};
}

std::optional<std::size_t> min_zero_exponent(const AdjMatrix& a) {
    // Edge sets only grow with k and a strongly connected graph has
    // diameter <= n - 1, so there is nothing to find past that.
    const std::size_t bound = std::max<std::size_t>(1, a.size() - 1);
    AdjMatrix p = a;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (is_all_zero(p)) return k;
        p = mat_mul(a, p);
    }
    return std::nullopt;
}

std::optional<std::size_t> converges_for_init(const AdjMatrix& a, std::span<const ExtendedReal> x0) {
    if (a.size() != x0.size()) throw DimensionError("converges_for_init: matrix and state differ in size");
    const ExtendedReal top = max_component(x0);
    std::vector<Node> argmax;
    for (Node i = 0; i < x0.size(); ++i)
        if (x0[i] == top) argmax.push_back(i);
    const auto dist = distances_from(dependency_graph(a), std::span<const Node>(argmax));
    std::size_t rounds = 0;
    for (const auto& d : dist) {
        if (!d) return std::nullopt;
        rounds = std::max(rounds, *d);
    }
    return rounds;
}

StateVector distinct_initial_values(std::size_t n, Rng& rng, std::optional<Node> argmax) {
    std::vector<ExtendedReal::value_type> values(n);
    std::iota(values.begin(), values.end(), 1);
    rng.shuffle(std::span(values));
    if (argmax) {
        if (*argmax >= n) throw NodeError("argmax node out of range");
        auto top = std::find(values.begin(), values.end(), static_cast<ExtendedReal::value_type>(n));
        std::iter_swap(top, values.begin() + static_cast<std::ptrdiff_t>(*argmax));
    }
    return StateVector(values.begin(), values.end());
}

FaultReport fault_check(const AdjMatrix& a, std::size_t expected_steps, std::size_t trials, std::uint64_t seed) {
    if (expected_steps == 0) throw std::invalid_argument("fault_check: expected_steps must be at least 1");
    FaultReport report;
    report.trials = trials;
    const std::size_t n = a.size();
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Node argmax = t % n;
        const auto trace = run_fixed(a, distinct_initial_values(n, rng, argmax), expected_steps);
        if (trace.converged_at) continue;
        ++report.failed_trials;
        if (!report.first_failed_trial) {
            report.first_failed_trial = t;
            report.first_failed_argmax = argmax;
        }
    }
    report.fault = report.failed_trials > 0;
    return report;
}

std::string format_trace(const Trace& trace) {
    std::string out;
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
        out += std::to_string(k);
        for (const auto& v : trace.states[k]) {
            out += ' ';
            out += to_string(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace maxcon
