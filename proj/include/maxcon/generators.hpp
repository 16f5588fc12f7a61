#pragma once

// Seeded network families and fault injection.
//
//   complete         every ordered pair j -> i
//   cycle            i -> i+1 (mod n)
//   path             i -> i+1
//   star_in          every leaf -> node 1
//   erdos_renyi      each ordered pair j -> i, j != i, kept with probability p
//   watts_strogatz   ring lattice of even degree k, each edge rewired with
//                    probability beta; undirected edges become both directions
//   barabasi_albert  (m+1)-clique seed, then each new node attaches to m
//                    distinct nodes by preferential attachment; symmetrised
//
// Generation is a pure function of GenSpec.

#include "maxcon/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace maxcon {

enum class Family { complete, cycle, path, star_in, erdos_renyi, watts_strogatz, barabasi_albert };

std::string to_string(Family f);
// Throws std::invalid_argument for unknown names.
Family parse_family(const std::string& name);

struct GenSpec {
    Family family = Family::complete;
    std::size_t n = 1;
    double p = 0.0;          // erdos_renyi
    std::size_t k = 2;       // watts_strogatz
    double beta = 0.0;       // watts_strogatz
    std::size_t m = 1;       // barabasi_albert
    std::uint64_t seed = 0;

    // Throws std::invalid_argument when a parameter is out of range.
    void validate() const;
};

Digraph generate(const GenSpec& spec);

// Copy of g without from -> to. Self-loops cannot be removed.
Digraph inject_fault(const Digraph& g, Edge edge);

struct DiameterSummary {
    std::size_t samples = 0;
    std::size_t strongly_connected = 0;
    double sc_fraction = 0.0;
    // Over the strongly connected samples only; the median is the lower median.
    std::optional<std::size_t> min_diameter;
    std::optional<std::size_t> median_diameter;
    std::optional<std::size_t> max_diameter;
};

// Sample s is generated with seed derive_seed(spec.seed, s).
DiameterSummary measure_diameter_distribution(const GenSpec& spec, std::size_t samples);

}  // namespace maxcon
