#include "maxcon/generators.hpp"

#include "maxcon/random.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maxcon {

namespace {

constexpr std::array<std::pair<Family, const char*>, 7> kFamilyNames{{
    {Family::complete, "complete"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::star_in, "star_in"},
    {Family::erdos_renyi, "erdos_renyi"},
    {Family::watts_strogatz, "watts_strogatz"},
    {Family::barabasi_albert, "barabasi_albert"},
}};

using Undirected = std::vector<std::set<Node>>;

Digraph symmetrize(const Undirected& adj) {
    Digraph g(adj.size());
    for (Node u = 0; u < adj.size(); ++u)
        for (Node v : adj[u]) g.add_edge(u, v);
    return g;
}

Digraph watts_strogatz(const GenSpec& spec, Rng& rng) {
    const std::size_t n = spec.n;
    Undirected adj(n);
    for (Node u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= spec.k / 2; ++j) {
            const Node v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for (std::size_t j = 1; j <= spec.k / 2; ++j) {
        for (Node u = 0; u < n; ++u) {
            const Node v = (u + j) % n;
            if (!rng.bernoulli(spec.beta)) continue;
            if (adj[u].size() >= n - 1) continue;  // nowhere to rewire to
            if (!adj[u].contains(v)) continue;     // already rewired away
            Node w;
            do {
                w = static_cast<Node>(rng.below(n));
            } while (w == u || adj[u].contains(w));
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    return symmetrize(adj);
}

Digraph barabasi_albert(const GenSpec& spec, Rng& rng) {
    const std::size_t n = spec.n;
    const std::size_t m = spec.m;
    Undirected adj(n);
    // Each node appears once per incident edge end, so a uniform pick is degree-proportional.
    std::vector<Node> ends;
    for (Node u = 0; u <= m; ++u) {
        for (Node v = u + 1; v <= m; ++v) {
            adj[u].insert(v);
            adj[v].insert(u);
            ends.push_back(u);
            ends.push_back(v);
        }
    }
    for (Node u = m + 1; u < n; ++u) {
        std::set<Node> targets;
        while (targets.size() < m) targets.insert(ends[static_cast<std::size_t>(rng.below(ends.size()))]);
        for (Node v : targets) {
            adj[u].insert(v);
            adj[v].insert(u);
            ends.push_back(u);
            ends.push_back(v);
        }
    }
    return symmetrize(adj);
}

}  // namespace

std::string to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "unknown";
}

Family parse_family(const std::string& name) {
    for (const auto& [fam, fam_name] : kFamilyNames)
        if (name == fam_name) return fam;
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

void GenSpec::validate() const {
    if (n == 0) throw std::invalid_argument("n must be positive");
    switch (family) {
        case Family::erdos_renyi:
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
            break;
        case Family::watts_strogatz:
            if (k < 2 || k % 2 != 0) throw std::invalid_argument("watts_strogatz: k must be even and at least 2");
            if (k >= n) throw std::invalid_argument("watts_strogatz: k must be smaller than n");
            if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("watts_strogatz: beta must lie in [0, 1]");
            break;
        case Family::barabasi_albert:
            if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert: m must satisfy 1 <= m < n");
            break;
        default:
            break;
    }
}

Digraph generate(const GenSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n;
    Rng rng(spec.seed);
    Digraph g(n);
    switch (spec.family) {
        case Family::complete:
            for (Node j = 0; j < n; ++j)
                for (Node i = 0; i < n; ++i) g.add_edge(j, i);
            break;
        case Family::cycle:
            for (Node j = 0; j < n; ++j) g.add_edge(j, (j + 1) % n);
            break;
        case Family::path:
            for (Node j = 0; j + 1 < n; ++j) g.add_edge(j, j + 1);
            break;
        case Family::star_in:
            for (Node j = 1; j < n; ++j) g.add_edge(j, 0);
            break;
        case Family::erdos_renyi:
            for (Node j = 0; j < n; ++j)
                for (Node i = 0; i < n; ++i)
                    if (i != j && rng.bernoulli(spec.p)) g.add_edge(j, i);
            break;
        case Family::watts_strogatz:
            return watts_strogatz(spec, rng);
        case Family::barabasi_albert:
            return barabasi_albert(spec, rng);
    }
    return g;
}

Digraph inject_fault(const Digraph& g, Edge edge) {
    Digraph faulty = g;
    faulty.remove_edge(edge.from, edge.to);
    return faulty;
}

DiameterSummary measure_diameter_distribution(const GenSpec& spec, std::size_t samples) {
    if (samples == 0) throw std::invalid_argument("samples must be at least 1");
    spec.validate();
    DiameterSummary summary;
    summary.samples = samples;
    std::vector<std::size_t> diameters;
    for (std::size_t s = 0; s < samples; ++s) {
        GenSpec sample = spec;
        sample.seed = derive_seed(spec.seed, s);
        const Diameter d = diameter(generate(sample));
        if (d.is_finite()) diameters.push_back(*d.value);
    }
    summary.strongly_connected = diameters.size();
    summary.sc_fraction = static_cast<double>(diameters.size()) / static_cast<double>(samples);
    if (!diameters.empty()) {
        std::sort(diameters.begin(), diameters.end());
        summary.min_diameter = diameters.front();
        summary.median_diameter = diameters[(diameters.size() - 1) / 2];
        summary.max_diameter = diameters.back();
    }
    return summary;
}

}  // namespace maxcon
