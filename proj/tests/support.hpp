#pragma once

// Test-only instance generators and oracles. The oracles deliberately avoid
// the library's bit-packed kernels, BFS and SCC code.

#include "maxcon/graph.hpp"
#include "maxcon/random.hpp"
#include "maxcon/tropical.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace maxcon::testing {

// 1-based edge helper matching how the examples are written: e(1, 2) is 1 -> 2.
inline Edge e(std::size_t from, std::size_t to) { return Edge{from - 1, to - 1}; }

inline Digraph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::vector<Edge>(edges));
}

inline Digraph cycle3() { return graph_of(3, {e(1, 2), e(2, 3), e(3, 1)}); }
inline Digraph path3() { return graph_of(3, {e(1, 2), e(2, 3)}); }

inline StateVector vec(std::initializer_list<std::int64_t> xs) {
    StateVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

inline AdjMatrix random_adj(std::size_t n, double density, Rng& rng) {
    AdjMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rng.bernoulli(density)) a.set_zero(i, j);
    return a;
}

// Random size in [lo, hi] and random density, so both connected and
// disconnected instances show up.
inline AdjMatrix random_adj_between(std::size_t lo, std::size_t hi, Rng& rng) {
    const std::size_t n = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
    return random_adj(n, 0.05 + 0.6 * rng.uniform01(), rng);
}

inline ExtendedReal random_scalar(Rng& rng) {
    if (rng.below(6) == 0) return kNegInf;
    return ExtendedReal{static_cast<std::int64_t>(rng.below(2001)) - 1000};
}

// Graph with bitmask-selected off-diagonal edges, for exhaustive sweeps.
inline Digraph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Digraph g(n);
    std::size_t bit = 0;
    for (Node j = 0; j < n; ++j)
        for (Node i = 0; i < n; ++i) {
            if (i == j) continue;
            if ((mask >> bit) & 1u) g.add_edge(j, i);
            ++bit;
        }
    return g;
}

// ---- oracles -------------------------------------------------------------

using DenseMatrix = std::vector<std::vector<ExtendedReal>>;

inline DenseMatrix dense(const AdjMatrix& a) {
    DenseMatrix d(a.size(), std::vector<ExtendedReal>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = a.at(i, j);
    return d;
}

// Textbook max-plus product on scalars.
inline DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size();
    DenseMatrix c(n, std::vector<ExtendedReal>(n, kNegInf));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l].is_neg_inf() || b[l][j].is_neg_inf()) continue;
                const ExtendedReal s{a[i][l].value() + b[l][j].value()};
                if (c[i][j] < s) c[i][j] = s;
            }
    return c;
}

inline DenseMatrix dense_pow(const AdjMatrix& a, std::size_t k) {
    DenseMatrix p(a.size(), std::vector<ExtendedReal>(a.size(), kNegInf));
    for (std::size_t i = 0; i < a.size(); ++i) p[i][i] = ExtendedReal{0};
    const DenseMatrix base = dense(a);
    for (std::size_t s = 0; s < k; ++s) p = dense_mul(base, p);
    return p;
}

inline StateVector dense_apply(const DenseMatrix& a, const StateVector& x) {
    StateVector y(x.size(), kNegInf);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (a[i][j].is_neg_inf() || x[j].is_neg_inf()) continue;
            const ExtendedReal s{a[i][j].value() + x[j].value()};
            if (y[i] < s) y[i] = s;
        }
    return y;
}

// OR-AND product.
inline BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
    const std::size_t n = a.size();
    BoolMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool acc = false;
            for (std::size_t l = 0; l < n; ++l) acc = acc || (a.at(i, l) && b.at(l, j));
            c.set(i, j, acc);
        }
    return c;
}

inline BoolMatrix bool_or(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c.set(i, j, a.at(i, j) || b.at(i, j));
    return c;
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// All-pairs hop distances by Floyd-Warshall; dist[u][v] is u -> v.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kUnreachable));
    for (Node u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Node v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) d[u][v] = 1;
    }
    for (Node w = 0; w < n; ++w)
        for (Node u = 0; u < n; ++u)
            for (Node v = 0; v < n; ++v)
                if (d[u][w] != kUnreachable && d[w][v] != kUnreachable && d[u][w] + d[w][v] < d[u][v])
                    d[u][v] = d[u][w] + d[w][v];
    return d;
}

inline std::optional<std::size_t> oracle_diameter(const Digraph& g) {
    std::size_t best = 0;
    for (const auto& row : floyd_warshall(g))
        for (auto v : row) {
            if (v == kUnreachable) return std::nullopt;
            if (v > best) best = v;
        }
    return best;
}

// Direct application of the protocol with explicit max loops.
inline StateVector naive_round(const Digraph& g, const StateVector& x) {
    StateVector y(x.size());
    for (Node i = 0; i < g.size(); ++i) {
        ExtendedReal best = x[i];
        for (Node j = 0; j < g.size(); ++j)
            if (g.has_edge(j, i) && best < x[j]) best = x[j];
        y[i] = best;
    }
    return y;
}

inline bool all_equal(const StateVector& x) {
    for (const auto& v : x)
        if (!(v == x.front())) return false;
    return true;
}

// First round at which the naive simulation is constant, within `rounds`.
inline std::optional<std::size_t> naive_consensus_round(const Digraph& g, StateVector x, std::size_t rounds) {
    for (std::size_t k = 0; k <= rounds; ++k) {
        if (all_equal(x)) return k;
        x = naive_round(g, x);
    }
    return std::nullopt;
}

}  // namespace maxcon::testing
