#pragma once

// Directed graphs with mandatory self-loops and their correspondence with
// tropical adjacency matrices. Nodes are 0-based in the API; text formats
// use 1-based labels.

#include "maxcon/tropical.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxcon {

using Node = std::size_t;

// Directed edge from -> to: node `to` receives information from `from`.
struct Edge {
    Node from;
    Node to;

    auto operator<=>(const Edge&) const = default;
};

class Digraph {
public:
    // Self-loops only.
    explicit Digraph(std::size_t n);

    std::size_t size() const noexcept { return out_.size(); }

    bool has_edge(Node from, Node to) const;
    // Adds from -> to; no-op if present. Throws NodeError on bad endpoints.
    void add_edge(Node from, Node to);
    // Throws NodeError if the edge is missing, std::invalid_argument for a self-loop.
    void remove_edge(Node from, Node to);

    // Sorted, self-loop included.
    const std::vector<Node>& out_neighbors(Node v) const;
    const std::vector<Node>& in_neighbors(Node v) const;

    // All edges including self-loops, ordered by (from, to).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const noexcept;

    bool operator==(const Digraph&) const = default;

private:
    void check(Node v) const;

    std::vector<std::vector<Node>> out_;
    std::vector<std::vector<Node>> in_;
};

Digraph from_edges(std::size_t n, std::span<const Edge> edges);

// (A)_ij = 0 iff i == j or j -> i.
AdjMatrix adjacency(const Digraph& g);
// Inverse of adjacency: edge j -> i iff (A)_ij = 0.
Digraph dependency_graph(const AdjMatrix& a);

// In-neighbour set of i, including i.
std::vector<Node> neighbors(const Digraph& g, Node i);
// Nodes whose shortest path to i has length <= p; p >= 1.
std::vector<Node> p_neighbors(const Digraph& g, Node i, std::size_t p);

// Hop counts from `source` along edge direction; nullopt where unreachable.
std::vector<std::optional<std::size_t>> distances_from(const Digraph& g, Node source);
// Multi-source variant: distance to the nearest source.
std::vector<std::optional<std::size_t>> distances_from(const Digraph& g, std::span<const Node> sources);

// Components in topological order of the condensation (components that
// receive no edges from other components come first). Nodes sorted within.
std::vector<std::vector<Node>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

struct Diameter {
    std::optional<std::size_t> value;  // nullopt means infinite

    bool is_finite() const noexcept { return value.has_value(); }
    bool operator==(const Diameter&) const = default;
};

std::string to_string(const Diameter& d);  // "inf" when infinite

// Max over ordered pairs of the shortest path length; 0 for a single node.
Diameter diameter(const Digraph& g);

Digraph union_graph(std::span<const Digraph> graphs);
bool is_jointly_strongly_connected(std::span<const Digraph> graphs);

// Relabelling that exposes reducibility: with rows and columns reordered by
// `order`, every entry (r, c) with r < leading_block <= c is -inf.
struct BlockForm {
    std::vector<Node> order;  // order[new_index] = original node
    std::size_t leading_block = 0;
};

// nullopt iff the dependency graph of `a` is strongly connected.
std::optional<BlockForm> reducible_block_form(const AdjMatrix& a);
// Returns S A S^T for the permutation listed in `order`.
AdjMatrix permute(const AdjMatrix& a, std::span<const Node> order);

// Every node reachable from `root`.
bool has_spanning_tree_rooted_at(const Digraph& g, Node root);

// Edge-list format: first line n, then "j i" lines (edge j -> i, 1-based).
// Blank lines and lines starting with '#' are ignored; self-loops may be omitted.
Digraph read_edge_list(std::istream& in);
Digraph parse_edge_list(const std::string& text);
std::string format_edge_list(const Digraph& g);
std::string to_dot(const Digraph& g);

}  // namespace maxcon
