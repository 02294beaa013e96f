#pragma once

// Undirected simple graphs and the four families compared throughout the
// library: paths P_n, cycles C_n, the snake Z_n (a path with a pendant pair
// at one end) and the double snake W_n (a pendant pair at both ends).
//
// Labeling convention, relied on for bit-exact adjacency matrices:
//   * path vertices are 0..m-1 in path order;
//   * pendant vertices are appended after the path vertices;
//   * Z_n hangs its pendants {n-2, n-1} on vertex 0;
//   * W_n hangs {n-4, n-3} on vertex 0 and {n-2, n-1} on vertex n-5.

#include "specdist/error.hpp"
#include "specdist/matrix.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specdist {

struct edge {
    std::size_t u;
    std::size_t v;
    auto operator<=>(const edge&) const = default;
};

class graph {
public:
    /// Validates and canonicalizes: endpoints ordered u < v, edges sorted.
    explicit graph(std::size_t n, std::vector<edge> edges = {}) : n_(n), edges_(std::move(edges)) {
        if (n_ == 0) throw error(errc::invalid_graph, "graph must have at least one vertex");
        for (auto& e : edges_) {
            if (e.u >= n_ || e.v >= n_)
                throw error(errc::invalid_graph, "edge endpoint out of range");
            if (e.u == e.v) throw error(errc::invalid_graph, "self-loop");
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw error(errc::invalid_graph, "duplicate edge");
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const edge> edges() const noexcept { return edges_; }

    bool has_edge(std::size_t u, std::size_t v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), edge{u, v});
    }

    std::size_t degree(std::size_t v) const {
        return static_cast<std::size_t>(std::count_if(
            edges_.begin(), edges_.end(), [v](const edge& e) { return e.u == v || e.v == v; }));
    }

    std::vector<std::vector<std::size_t>> adjacency_list() const {
        std::vector<std::vector<std::size_t>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }

    friend bool operator==(const graph&, const graph&) = default;

private:
    std::size_t n_;
    std::vector<edge> edges_;
};

enum class family { path, cycle, z_tree, w_tree };

inline constexpr std::size_t min_order(family f) {
    switch (f) {
    case family::path: return 1;
    case family::cycle: return 3;
    case family::z_tree: return 4;
    case family::w_tree: return 6;
    }
    return 0;
}

/// Single-letter name: P, C, Z, W.
inline constexpr char family_letter(family f) {
    switch (f) {
    case family::path: return 'P';
    case family::cycle: return 'C';
    case family::z_tree: return 'Z';
    case family::w_tree: return 'W';
    }
    return '?';
}

inline std::optional<family> parse_family(std::string_view s) {
    if (s == "p" || s == "P" || s == "path") return family::path;
    if (s == "c" || s == "C" || s == "cycle") return family::cycle;
    if (s == "z" || s == "Z" || s == "ztree") return family::z_tree;
    if (s == "w" || s == "W" || s == "wtree") return family::w_tree;
    return std::nullopt;
}

inline constexpr family all_families[] = {family::path, family::cycle, family::z_tree,
                                          family::w_tree};

struct family_spec {
    family kind;
    std::size_t n;
};

inline void require_order(family f, std::size_t n) {
    if (n < min_order(f)) {
        throw error(errc::order_too_small, std::string(1, family_letter(f)) + " requires n ≥ " +
                                               std::to_string(min_order(f)));
    }
}

inline graph build_path(std::size_t n) {
    require_order(family::path, n);
    std::vector<edge> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return graph(n, std::move(edges));
}

inline graph build_cycle(std::size_t n) {
    require_order(family::cycle, n);
    std::vector<edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 1, 0});
    return graph(n, std::move(edges));
}

/// Identifies vertex u of g with vertex v of h. Vertices of g keep their
/// labels; the remaining vertices of h follow in their original order.
inline graph coalesce(const graph& g, std::size_t u, const graph& h, std::size_t v) {
    if (u >= g.order() || v >= h.order())
        throw error(errc::index_out_of_range, "coalescence vertex out of range");
    const std::size_t base = g.order();
    auto relabel = [&](std::size_t w) {
        if (w == v) return u;
        return w < v ? base + w : base + w - 1;
    };
    std::vector<edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& e : h.edges()) edges.push_back({relabel(e.u), relabel(e.v)});
    return graph(g.order() + h.order() - 1, std::move(edges));
}

/// Z_n: P_{n-2} and P_3 glued at an end of the path and the center of P_3.
inline graph build_z(std::size_t n) {
    require_order(family::z_tree, n);
    return coalesce(build_path(n - 2), 0, build_path(3), 1);
}

/// W_n built directly: path on n-4 vertices with a pendant pair at each end.
/// The coalescence definition has no admissible gluing vertex at n = 6.
inline graph build_w(std::size_t n) {
    require_order(family::w_tree, n);
    const std::size_t m = n - 4;
    std::vector<edge> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, m});
    edges.push_back({0, m + 1});
    edges.push_back({m - 1, m + 2});
    edges.push_back({m - 1, m + 3});
    return graph(n, std::move(edges));
}

/// W_n as the coalescence of Z_{n-2} and P_3, glued at the degree-1 vertex of
/// Z_{n-2} adjacent to a degree-2 vertex. Needs n >= 7.
inline graph build_w_by_coalescence(std::size_t n) {
    if (n < 7)
        throw error(errc::order_too_small,
                    "W by coalescence requires n ≥ 7 (Z_4 has no admissible vertex)");
    const graph z = build_z(n - 2);
    const auto adj = z.adjacency_list();
    for (std::size_t v = 0; v < z.order(); ++v) {
        if (adj[v].size() == 1 && adj[adj[v][0]].size() == 2)
            return coalesce(z, v, build_path(3), 1);
    }
    throw error(errc::invalid_graph, "no admissible gluing vertex");
}

inline graph build(const family_spec& spec) {
    switch (spec.kind) {
    case family::path: return build_path(spec.n);
    case family::cycle: return build_cycle(spec.n);
    case family::z_tree: return build_z(spec.n);
    case family::w_tree: return build_w(spec.n);
    }
    throw error(errc::invalid_graph, "unknown family");
}

inline square_matrix adjacency_matrix(const graph& g) {
    square_matrix m(g.order());
    for (const auto& e : g.edges()) {
        m(e.u, e.v) = 1.0;
        m(e.v, e.u) = 1.0;
    }
    return m;
}

/// Vertex degrees, descending.
inline std::vector<std::size_t> degree_sequence(const graph& g) {
    std::vector<std::size_t> deg(g.order(), 0);
    for (const auto& e : g.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::sort(deg.begin(), deg.end(), std::greater<>{});
    return deg;
}

inline bool is_connected(const graph& g) {
    const auto adj = g.adjacency_list();
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.order();
}

inline bool is_tree(const graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

/// BFS two-coloring over every component.
inline bool is_bipartite(const graph& g) {
    const auto adj = g.adjacency_list();
    std::vector<int> color(g.order(), -1);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (auto w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

// AHU encoding of the tree rooted at `root`, built bottom-up so deep paths
// do not recurse.
inline std::string rooted_tree_code(const std::vector<std::vector<std::size_t>>& adj,
                                    std::size_t root) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> parent(n, n), order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto w : adj[order[i]]) {
            if (parent[w] == n) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::string>> child_codes(n);
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& kids = child_codes[*it];
        std::sort(kids.begin(), kids.end());
        std::string c = "(";
        for (auto& k : kids) c += k;
        c += ")";
        code[*it] = std::move(c);
        kids.clear();
        if (*it != root) child_codes[parent[*it]].push_back(code[*it]);
    }
    return code[root];
}

} // namespace detail

/// Canonical string of a tree, equal for two trees iff they are isomorphic.
inline std::string tree_canonical_form(const graph& g) {
    if (!is_tree(g)) throw error(errc::invalid_graph, "canonical form is defined for trees only");
    const auto adj = g.adjacency_list();
    const std::size_t n = g.order();
    if (n == 1) return "()";

    // Peel leaves until one or two centers remain.
    std::vector<std::size_t> deg(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::size_t> next;
        for (auto v : layer)
            for (auto w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best = detail::rooted_tree_code(adj, layer[0]);
    if (layer.size() == 2) best = std::min(best, detail::rooted_tree_code(adj, layer[1]));
    return best;
}

inline bool isomorphic_trees(const graph& a, const graph& b) {
    return a.order() == b.order() && tree_canonical_form(a) == tree_canonical_form(b);
}

// Edge-list text format:
//   n <count>
//   i j
//   ...
// Blank lines and lines starting with '#' are ignored.

inline void write_edge_list(std::ostream& os, const graph& g) {
    os << "n " << g.order() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline graph read_edge_list(std::istream& is) {
    std::string line;
    std::optional<std::size_t> n;
    std::vector<edge> edges;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw error(errc::parse_error, "edge list line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!n) {
            std::string tag;
            long long count = 0;
            if (!(ls >> tag >> count) || tag != "n" || count <= 0) fail("expected header 'n <count>'");
            n = static_cast<std::size_t>(count);
        } else {
            long long i = 0, j = 0;
            if (!(ls >> i >> j) || i < 0 || j < 0) fail("expected 'i j'");
            edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
        }
        std::string rest;
        if (ls >> rest) fail("trailing characters");
    }
    if (!n) throw error(errc::parse_error, "edge list is missing the 'n <count>' header");
    return graph(*n, std::move(edges));
}

} // namespace specdist
