#include "maxcon/graph.hpp"

#include "maxcon/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <sstream>

namespace maxcon {

namespace {

void sorted_insert(std::vector<Node>& v, Node x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool sorted_erase(std::vector<Node>& v, Node x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return false;
    v.erase(it);
    return true;
}

}  // namespace

Digraph::Digraph(std::size_t n) : out_(n), in_(n) {
    if (n == 0) throw std::invalid_argument("graph needs at least one node");
    for (Node v = 0; v < n; ++v) {
        out_[v].push_back(v);
        in_[v].push_back(v);
    }
}

void Digraph::check(Node v) const {
    if (v >= size()) {
        throw NodeError("node " + std::to_string(v + 1) + " out of range 1.." + std::to_string(size()));
    }
}

bool Digraph::has_edge(Node from, Node to) const {
    check(from);
    check(to);
    return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

void Digraph::add_edge(Node from, Node to) {
    check(from);
    check(to);
    sorted_insert(out_[from], to);
    sorted_insert(in_[to], from);
}

void Digraph::remove_edge(Node from, Node to) {
    check(from);
    check(to);
    if (from == to) throw std::invalid_argument("self-loops cannot be removed");
    if (!sorted_erase(out_[from], to)) {
        throw NodeError("edge " + std::to_string(from + 1) + " -> " + std::to_string(to + 1) +
                        " is not in the graph");
    }
    sorted_erase(in_[to], from);
}

const std::vector<Node>& Digraph::out_neighbors(Node v) const {
    check(v);
    return out_[v];
}

const std::vector<Node>& Digraph::in_neighbors(Node v) const {
    check(v);
    return in_[v];
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Node j = 0; j < size(); ++j)
        for (Node i : out_[j]) out.push_back({j, i});
    return out;
}

std::size_t Digraph::edge_count() const noexcept {
    std::size_t c = 0;
    for (const auto& v : out_) c += v.size();
    return c;
}

Digraph from_edges(std::size_t n, std::span<const Edge> edges) {
    Digraph g(n);
    for (const auto& e : edges) g.add_edge(e.from, e.to);
    return g;
}

AdjMatrix adjacency(const Digraph& g) {
    AdjMatrix a(g.size());
    for (Node j = 0; j < g.size(); ++j)
        for (Node i : g.out_neighbors(j)) a.set_zero(i, j);
    return a;
}

Digraph dependency_graph(const AdjMatrix& a) {
    Digraph g(a.size());
    for (Node i = 0; i < a.size(); ++i)
        for (Node j = 0; j < a.size(); ++j)
            if (i != j && a.is_zero_at(j, i)) g.add_edge(i, j);
    return g;
}

std::vector<Node> neighbors(const Digraph& g, Node i) { return g.in_neighbors(i); }

std::vector<Node> p_neighbors(const Digraph& g, Node i, std::size_t p) {
    if (p == 0) throw std::invalid_argument("p_neighbors: p must be at least 1");
    std::vector<Node> current = g.in_neighbors(i);
    // N^p = (union over l in N^{p-1} of N_l) u N^{p-1}
    for (std::size_t level = 2; level <= p; ++level) {
        std::vector<Node> next = current;
        for (Node l : current)
            for (Node j : g.in_neighbors(l)) sorted_insert(next, j);
        if (next.size() == current.size()) break;
        current = std::move(next);
    }
    return current;
}

std::vector<std::optional<std::size_t>> distances_from(const Digraph& g, std::span<const Node> sources) {
    std::vector<std::optional<std::size_t>> dist(g.size());
    std::deque<Node> queue;
    for (Node s : sources) {
        if (s >= g.size()) throw NodeError("source node out of range");
        if (!dist[s]) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Node v = queue.front();
        queue.pop_front();
        for (Node w : g.out_neighbors(v)) {
            if (!dist[w]) {
                dist[w] = *dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::optional<std::size_t>> distances_from(const Digraph& g, Node source) {
    const Node s[] = {source};
    return distances_from(g, std::span<const Node>(s));
}

std::vector<std::vector<Node>> strongly_connected_components(const Digraph& g) {
    // Iterative Tarjan. Components pop out sinks first; reversed at the end.
    const std::size_t n = g.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Node> stack;
    std::vector<std::pair<Node, std::size_t>> call;  // (node, next out-edge position)
    std::vector<std::vector<Node>> sccs;
    std::size_t counter = 0;

    for (Node root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& succ = g.out_neighbors(v);
            if (pos < succ.size()) {
                const Node w = succ[pos++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Node done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<Node> comp;
                Node w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                sccs.push_back(std::move(comp));
            }
        }
    }
    std::reverse(sccs.begin(), sccs.end());
    return sccs;
}

bool is_strongly_connected(const Digraph& g) { return strongly_connected_components(g).size() == 1; }

std::string to_string(const Diameter& d) { return d.value ? std::to_string(*d.value) : std::string("inf"); }

Diameter diameter(const Digraph& g) {
    std::size_t d = 0;
    for (Node s = 0; s < g.size(); ++s) {
        for (const auto& dist : distances_from(g, s)) {
            if (!dist) return Diameter{};
            d = std::max(d, *dist);
        }
    }
    return Diameter{d};
}

Digraph union_graph(std::span<const Digraph> graphs) {
    if (graphs.empty()) throw std::invalid_argument("union_graph: empty graph list");
    Digraph u = graphs.front();
    for (const auto& g : graphs.subspan(1)) {
        if (g.size() != u.size()) throw DimensionError("union_graph: graphs have different node counts");
        for (const auto& e : g.edges()) u.add_edge(e.from, e.to);
    }
    return u;
}

bool is_jointly_strongly_connected(std::span<const Digraph> graphs) {
    return is_strongly_connected(union_graph(graphs));
}

std::optional<BlockForm> reducible_block_form(const AdjMatrix& a) {
    const auto sccs = strongly_connected_components(dependency_graph(a));
    if (sccs.size() == 1) return std::nullopt;
    BlockForm form;
    form.order.reserve(a.size());
    for (const auto& comp : sccs) form.order.insert(form.order.end(), comp.begin(), comp.end());
    // The first component receives no edges from later ones, so its rows
    // are -inf in every later column.
    form.leading_block = sccs.front().size();
    return form;
}

AdjMatrix permute(const AdjMatrix& a, std::span<const Node> order) {
    if (order.size() != a.size()) throw DimensionError("permute: order length differs from matrix size");
    std::vector<bool> seen(a.size(), false);
    for (Node v : order) {
        if (v >= a.size() || seen[v]) throw std::invalid_argument("permute: not a permutation");
        seen[v] = true;
    }
    AdjMatrix p(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            if (a.is_zero_at(order[r], order[c])) p.set_zero(r, c);
    return p;
}

bool has_spanning_tree_rooted_at(const Digraph& g, Node root) {
    const auto dist = distances_from(g, root);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

// ---------------------------------------------------------------------------

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::size_t parse_count(const std::string& tok, std::size_t lineno, const char* what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return v;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing node count");
    std::istringstream head(line);
    std::string tok, extra;
    head >> tok;
    if (head >> extra) throw ParseError(lineno, "node count line has extra tokens");
    const std::size_t n = parse_count(tok, lineno, "a node count");
    if (n == 0) throw ParseError(lineno, "node count must be positive");

    Digraph g(n);
    while (next_content_line(in, line, lineno)) {
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a >> b) || (ss >> extra)) throw ParseError(lineno, "expected 'j i', got '" + line + "'");
        const std::size_t j = parse_count(a, lineno, "a node label");
        const std::size_t i = parse_count(b, lineno, "a node label");
        if (j < 1 || j > n || i < 1 || i > n) {
            throw ParseError(lineno, "node label out of range 1.." + std::to_string(n));
        }
        g.add_edge(j - 1, i - 1);
    }
    return g;
}

Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string format_edge_list(const Digraph& g) {
    std::string out = std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) {
        if (e.from == e.to) continue;
        out += std::to_string(e.from + 1) + " " + std::to_string(e.to + 1) + "\n";
    }
    return out;
}

std::string to_dot(const Digraph& g) {
    std::string out = "digraph {\n";
    for (Node v = 0; v < g.size(); ++v) out += "  " + std::to_string(v + 1) + ";\n";
    for (const auto& e : g.edges()) {
        if (e.from == e.to) continue;
        out += "  " + std::to_string(e.from + 1) + " -> " + std::to_string(e.to + 1) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace maxcon
