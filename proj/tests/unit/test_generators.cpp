#include "doctest.h"

#include "maxcon/consensus.hpp"
#include "maxcon/error.hpp"
#include "maxcon/generators.hpp"

#include "support.hpp"

using namespace maxcon;
using namespace maxcon::testing;

namespace {

GenSpec spec(Family f, std::size_t n, std::uint64_t seed = 0) {
    GenSpec s;
    s.family = f;
    s.n = n;
    s.seed = seed;
    return s;
}

bool has_all_self_loops(const Digraph& g) {
    for (Node v = 0; v < g.size(); ++v)
        if (!g.has_edge(v, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("deterministic families") {
    CHECK(diameter(generate(spec(Family::complete, 4))) == Diameter{1});
    CHECK(diameter(generate(spec(Family::cycle, 5))) == Diameter{4});
    CHECK(diameter(generate(spec(Family::path, 4))) == Diameter{});
    CHECK(diameter(generate(spec(Family::star_in, 4))) == Diameter{});
    CHECK(generate(spec(Family::cycle, 1)) == Digraph(1));
    CHECK(generate(spec(Family::star_in, 3)) == graph_of(3, {e(2, 1), e(3, 1)}));

    GenSpec er = spec(Family::erdos_renyi, 8, 99);
    er.p = 1.0;
    CHECK(generate(er) == generate(spec(Family::complete, 8)));
    er.p = 0.0;
    CHECK(generate(er) == Digraph(8));
}

TEST_CASE("random families are reproducible and keep self-loops") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec er = spec(Family::erdos_renyi, 15, seed);
        er.p = 0.2;
        GenSpec ws = spec(Family::watts_strogatz, 16, seed);
        ws.k = 4;
        ws.beta = 0.3;
        GenSpec ba = spec(Family::barabasi_albert, 18, seed);
        ba.m = 2;
        for (const auto& s : {er, ws, ba}) {
            const auto g = generate(s);
            CHECK(g == generate(s));
            CHECK(format_edge_list(g) == format_edge_list(generate(s)));
            CHECK(has_all_self_loops(g));
        }
        // symmetrised families
        for (const auto& s : {ws, ba}) {
            const auto g = generate(s);
            for (const auto& edge : g.edges()) CHECK(g.has_edge(edge.to, edge.from));
        }
        CHECK(is_strongly_connected(generate(ba)));
    }
}

TEST_CASE("watts_strogatz without rewiring is the ring lattice") {
    GenSpec ws = spec(Family::watts_strogatz, 10, 3);
    ws.k = 4;
    ws.beta = 0.0;
    const auto g = generate(ws);
    CHECK(g.edge_count() == 10 + 10 * 4);
    CHECK(diameter(g) == Diameter{3});
}

TEST_CASE("barabasi_albert edge count") {
    GenSpec ba = spec(Family::barabasi_albert, 30, 8);
    ba.m = 3;
    // (m+1)-clique plus m undirected edges per later node, both directions, plus self-loops
    CHECK(generate(ba).edge_count() == 30 + 2 * (6 + 3 * 26));
}

TEST_CASE("different seeds give different random graphs") {
    GenSpec a = spec(Family::erdos_renyi, 20, 1);
    a.p = 0.3;
    GenSpec b = a;
    b.seed = 2;
    CHECK(generate(a) != generate(b));
}

TEST_CASE("parameter validation") {
    GenSpec er = spec(Family::erdos_renyi, 5);
    er.p = 1.5;
    CHECK_THROWS_AS(generate(er), std::invalid_argument);
    GenSpec ws = spec(Family::watts_strogatz, 5);
    ws.k = 3;
    CHECK_THROWS_AS(generate(ws), std::invalid_argument);
    ws.k = 6;
    CHECK_THROWS_AS(generate(ws), std::invalid_argument);
    GenSpec ba = spec(Family::barabasi_albert, 5);
    ba.m = 5;
    CHECK_THROWS_AS(generate(ba), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec(Family::cycle, 0)), std::invalid_argument);
    CHECK(parse_family("watts_strogatz") == Family::watts_strogatz);
    CHECK(to_string(Family::star_in) == "star_in");
    CHECK_THROWS_AS(parse_family("lattice"), std::invalid_argument);
}

TEST_CASE("inject_fault") {
    const Digraph broken = inject_fault(cycle3(), e(3, 1));
    CHECK(broken == path3());
    CHECK_FALSE(is_strongly_connected(broken));

    const Digraph dense = inject_fault(generate(spec(Family::complete, 3)), e(1, 2));
    CHECK(is_strongly_connected(dense));
    CHECK(*diameter(dense).value <= 2);

    CHECK_THROWS_AS(inject_fault(cycle3(), e(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(inject_fault(cycle3(), e(2, 1)), NodeError);
}

TEST_CASE("diameter distribution") {
    const auto full = measure_diameter_distribution(spec(Family::complete, 6), 4);
    CHECK(full.samples == 4);
    CHECK(full.sc_fraction == 1.0);
    CHECK(full.min_diameter == std::optional<std::size_t>{1});
    CHECK(full.max_diameter == std::optional<std::size_t>{1});

    const auto ring = measure_diameter_distribution(spec(Family::cycle, 6), 3);
    CHECK(ring.min_diameter == std::optional<std::size_t>{5});
    CHECK(ring.median_diameter == std::optional<std::size_t>{5});
    CHECK(ring.max_diameter == std::optional<std::size_t>{5});

    const auto none = measure_diameter_distribution(spec(Family::path, 4), 2);
    CHECK(none.strongly_connected == 0);
    CHECK_FALSE(none.min_diameter.has_value());

    CHECK_THROWS_AS(measure_diameter_distribution(spec(Family::cycle, 3), 0), std::invalid_argument);
}

TEST_CASE("erdos_renyi diameter snapshot") {
    // Regression snapshot of this generator's stream, not a property of the model.
    GenSpec er = spec(Family::erdos_renyi, 20, 0);
    er.p = 0.3;
    const auto s = measure_diameter_distribution(er, 50);
    CHECK(s.strongly_connected == 48);
    CHECK(s.min_diameter == std::optional<std::size_t>{3});
    CHECK(s.median_diameter == std::optional<std::size_t>{3});
    CHECK(s.max_diameter == std::optional<std::size_t>{4});
}

TEST_CASE("generated strongly connected graphs pass fault_check at their diameter") {
    std::uint64_t seed = 500;
    int checked = 0;
    for (Family f : {Family::complete, Family::cycle, Family::erdos_renyi, Family::watts_strogatz, Family::barabasi_albert}) {
        for (int t = 0; t < 8; ++t) {
            GenSpec s = spec(f, 4 + (seed % 12), seed);
            s.p = 0.35;
            s.k = 2;
            s.beta = 0.2;
            s.m = 1;
            ++seed;
            const auto g = generate(s);
            const auto d = diameter(g);
            if (!d.is_finite()) continue;
            ++checked;
            CHECK_FALSE(fault_check(adjacency(g), std::max<std::size_t>(1, *d.value), g.size(), seed).fault);
        }
    }
    CHECK(checked > 20);
}
