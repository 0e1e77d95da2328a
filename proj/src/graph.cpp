#include "stab/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "stab/error.hpp"

namespace stab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw parse_error("graph order must be at least 1 (got " + std::to_string(n) + ")");
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw parse_error("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw parse_error("loop at vertex " + std::to_string(u) + " not allowed");
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<int> Graph::neighbours(int v) const {
    const std::uint64_t* r = row(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

// ---- constructions --------------------------------------------------------

Graph empty_graph(int m) { return Graph(m); }

Graph complete_graph(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int m) {
    if (m < 3) throw parse_error("cycle needs at least 3 vertices (got " + std::to_string(m) + ")");
    Graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

Graph path_graph(int m) {
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph k2() { return complete_graph(2); }

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw parse_error("complete bipartite sides must be positive");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph hypercube_graph(int d) {
    if (d < 1 || d > 12) throw parse_error("hypercube dimension out of range [1,12]");
    Graph g(1 << d);
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

Graph circulant_graph(int n, const std::vector<int>& connections) {
    if (n < 1) throw parse_error("circulant order must be positive");
    Graph g(n);
    for (int s : connections) {
        if (s < 1 || s > n / 2)
            throw parse_error("circulant connection " + std::to_string(s) +
                              " out of range [1," + std::to_string(n / 2) + "]");
        for (int v = 0; v < n; ++v)
            if (s * 2 != n || v < (v + s) % n)  // avoid double-adding the antipodal step
                g.add_edge(v, (v + s) % n);
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v : a.neighbours(u))
            if (u < v) g.add_edge(u, v);
    int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v : b.neighbours(u))
            if (u < v) g.add_edge(off + u, off + v);
    return g;
}

Graph complement_graph(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& image) {
    int n = g.order();
    if (static_cast<int>(image.size()) != n) throw parse_error("relabel image has wrong length");
    std::vector<char> seen(n, 0);
    for (int x : image) {
        if (x < 0 || x >= n || seen[x]) throw parse_error("relabel image is not a bijection");
        seen[x] = 1;
    }
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbours(u))
            if (u < v) h.add_edge(image[u], image[v]);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    if (keep.empty()) throw parse_error("induced subgraph needs at least one vertex");
    std::vector<char> seen(g.order(), 0);
    for (int v : keep) {
        if (v < 0 || v >= g.order() || seen[v])
            throw parse_error("induced subgraph vertex list invalid");
        seen[v] = 1;
    }
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

// ---- structural predicates ------------------------------------------------

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(root);
        comp[root] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int v : g.neighbours(u))
                if (comp[v] == -1) {
                    comp[v] = id;
                    q.push(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
    int n = g.order();
    Bipartition bp;
    bp.side.assign(n, 2);  // 2 = unvisited
    for (int root = 0; root < n; ++root) {
        if (bp.side[root] != 2) continue;
        bp.side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbours(u)) {
                if (bp.side[v] == 2) {
                    bp.side[v] = static_cast<std::uint8_t>(1 - bp.side[u]);
                    q.push(v);
                } else if (bp.side[v] == bp.side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return bp;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<int> valency(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

bool is_regular(const Graph& g) { return valency(g).has_value(); }

std::optional<std::pair<int, int>> thick_witness(const Graph& g) {
    int n = g.order();
    int words = g.row_words();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool same = true;
            for (int w = 0; w < words && same; ++w)
                if (g.row(u)[w] != g.row(v)[w]) same = false;
            if (same) return std::make_pair(u, v);
        }
    return std::nullopt;
}

bool is_r_thin(const Graph& g) { return !thick_witness(g).has_value(); }

bool has_odd_cycle_in_every_component(const Graph& g) {
    for (const auto& comp : components(g))
        if (is_bipartite(induced_subgraph(g, comp))) return false;
    return true;
}

int min_degree(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

}  // namespace stab
