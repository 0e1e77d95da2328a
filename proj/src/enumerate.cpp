#include "stab/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <unordered_set>

#include "stab/autgroup.hpp"
#include "stab/error.hpp"
#include "stab/graph_io.hpp"
#include "stab/product.hpp"

namespace stab {

namespace {

std::string canon_key(const Graph& g) { return emit_graph6_canonical(g); }

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
    if (n < 1 || n > 8)
        throw parse_error("exhaustive enumeration supports orders 1..8 (got " +
                          std::to_string(n) + ")");
    static std::mutex mu;
    static std::vector<std::vector<Graph>> cache(9);
    std::lock_guard<std::mutex> lock(mu);

    std::function<const std::vector<Graph>&(int)> build = [&](int m) -> const std::vector<Graph>& {
        if (!cache[m].empty()) return cache[m];
        std::vector<Graph> out;
        if (m == 1) {
            out.emplace_back(1);
        } else {
            const std::vector<Graph>& parents = build(m - 1);
            std::unordered_set<std::string> seen;
            // Extend every (m-1)-vertex graph by one vertex in all ways,
            // keeping one representative per isomorphism class.
            for (const Graph& parent : parents)
                for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                    Graph child(m);
                    for (int u = 0; u < m - 1; ++u) {
                        for (int v : parent.neighbours(u))
                            if (u < v) child.add_edge(u, v);
                        if (mask & (1u << u)) child.add_edge(u, m - 1);
                    }
                    if (seen.insert(canon_key(child)).second) out.push_back(std::move(child));
                }
        }
        cache[m] = std::move(out);
        return cache[m];
    };
    return build(n);
}

std::vector<Graph> all_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int m = 1; m <= n; ++m)
        for (const Graph& g : all_graphs(m)) out.push_back(g);
    return out;
}

std::vector<Graph> regular_graphs(int n, int k, bool connected_only) {
    if (n < 1 || n > 12) throw parse_error("regular enumeration supports orders 1..12");
    if (k < 0) throw parse_error("valency must be non-negative");
    std::vector<Graph> out;
    if (k >= n || (n * k) % 2 != 0) return out;
    if (k == 0) {
        if (!connected_only || n == 1) out.emplace_back(n);
        return out;
    }
    if (k > (n - 1) / 2) {
        // Complementation is an isomorphism-class bijection between
        // k-regular and (n-1-k)-regular graphs.
        for (const Graph& g : regular_graphs(n, n - 1 - k, false)) {
            Graph c = complement_graph(g);
            if (!connected_only || is_connected(c)) out.push_back(std::move(c));
        }
        return out;
    }

    // Backtracking over adjacency rows.  Fixing N(0) = {1..k} loses no
    // isomorphism classes and trims the labelled search space.
    std::vector<std::uint32_t> rows(n, 0);
    std::vector<int> deg(n, 0);
    auto link = [&](int u, int v) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
        ++deg[u];
        ++deg[v];
    };
    auto unlink = [&](int u, int v) {
        rows[u] &= ~(1u << v);
        rows[v] &= ~(1u << u);
        --deg[u];
        --deg[v];
    };
    for (int v = 1; v <= k; ++v) link(0, v);

    std::unordered_set<std::string> seen;

    // Remaining degrees must be pairable among vertices > v.
    auto feasible = [&](int v) {
        int open = 0;
        for (int u = v + 1; u < n; ++u)
            if (deg[u] < k) ++open;
        for (int u = v + 1; u < n; ++u) {
            int need = k - deg[u];
            if (need > open - (deg[u] < k ? 1 : 0)) return false;
        }
        return true;
    };

    std::function<void(int)> place;
    std::function<void(int, int, int)> choose;  // (v, from, still_needed)

    place = [&](int v) {
        if (v == n) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int w = u + 1; w < n; ++w)
                    if (rows[u] & (1u << w)) g.add_edge(u, w);
            if (connected_only && !is_connected(g)) return;
            if (seen.insert(canon_key(g)).second) out.push_back(std::move(g));
            return;
        }
        choose(v, v + 1, k - deg[v]);
    };

    choose = [&](int v, int from, int needed) {
        if (needed == 0) {
            if (feasible(v)) place(v + 1);
            return;
        }
        if (n - from < needed) return;
        for (int u = from; u < n; ++u) {
            if (deg[u] >= k) continue;
            link(v, u);
            choose(v, u + 1, needed - 1);
            unlink(v, u);
        }
    };

    place(1);
    return out;
}

std::vector<Graph> regular_graphs_up_to(int n, bool connected_only) {
    std::vector<Graph> out;
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k)
            for (Graph& g : regular_graphs(m, k, connected_only)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> vertex_transitive_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_up_to(n))
        if (is_vertex_transitive(g)) out.push_back(g);
    return out;
}

namespace {

Graph crown_graph(int a) {
    // K_{a,a} minus a perfect matching; connected for a >= 3.
    Graph g(2 * a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (i != j) g.add_edge(i, a + j);
    return g;
}

Graph generalized_petersen(int n, int k) {
    // Outer n-cycle 0..n-1, inner star polygon n..2n-1 with step k, spokes.
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + k) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

Graph heawood_graph() {
    // 14-cycle plus chords i -- i+5 from every even vertex.
    Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

void add_candidate(std::vector<std::pair<std::string, Graph>>& pool,
                   std::unordered_set<std::string>& seen, Graph g) {
    std::string key = canon_key(g);
    if (seen.insert(key).second) pool.emplace_back(std::move(key), std::move(g));
}

std::vector<Graph> finalize_sorted(std::vector<std::pair<std::string, Graph>>& pool) {
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
        return a.first < b.first;
    });
    std::vector<Graph> out;
    out.reserve(pool.size());
    for (auto& [key, g] : pool) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<Graph> internal_arc_transitive_corpus(int max_order, const RunConfig& cfg) {
    if (max_order < 2 || max_order > 24)
        throw parse_error("arc-transitive corpus supports orders 2..24");
    SearchLimits limits = limits_from(cfg);

    std::vector<Graph> candidates;
    for (int m = 3; m <= max_order; ++m) candidates.push_back(cycle_graph(m));
    for (int m = 2; m <= max_order; ++m) candidates.push_back(complete_graph(m));
    for (int a = 2; 2 * a <= max_order; ++a) candidates.push_back(complete_bipartite_graph(a, a));
    for (int d = 2; (1 << d) <= max_order; ++d) candidates.push_back(hypercube_graph(d));
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}})
        if (2 * n <= max_order) candidates.push_back(generalized_petersen(n, k));
    if (max_order >= 14) candidates.push_back(heawood_graph());

    // All circulants: every connection set on every order in range.
    for (int m = 3; m <= max_order; ++m) {
        int half = m / 2;
        for (unsigned mask = 1; mask < (1u << half); ++mask) {
            std::vector<int> conns;
            for (int s = 1; s <= half; ++s)
                if (mask & (1u << (s - 1))) conns.push_back(s);
            candidates.push_back(circulant_graph(m, conns));
        }
    }

    // Small non-circulant stragglers from the exhaustive enumeration.
    for (const Graph& g : all_graphs_up_to(std::min(max_order, 7))) candidates.push_back(g);

    std::vector<std::pair<std::string, Graph>> pool;
    std::unordered_set<std::string> seen;
    for (Graph& g : candidates) {
        if (g.order() > max_order || g.edge_count() == 0) continue;
        if (!is_connected(g)) continue;
        if (!is_arc_transitive(g, limits)) continue;
        add_candidate(pool, seen, std::move(g));
    }
    return finalize_sorted(pool);
}

std::vector<Graph> internal_bipartite_corpus(int max_order, const RunConfig& cfg) {
    if (max_order < 2 || max_order > 14)
        throw parse_error("bipartite corpus supports orders 2..14");

    std::vector<std::pair<std::string, Graph>> pool;
    std::unordered_set<std::string> seen;
    auto keep = [&](Graph g) {
        if (g.order() > max_order) return;
        if (!is_connected(g) || !is_bipartite(g)) return;
        add_candidate(pool, seen, std::move(g));
    };

    // Exhaustive slice.
    for (const Graph& g : all_graphs_up_to(std::min(max_order, 8))) keep(g);

    // Structured families reaching the larger orders.
    for (int t = 2; 2 * t <= max_order; ++t) keep(cycle_graph(2 * t));
    for (int a = 1; a <= max_order; ++a)
        for (int b = a; a + b <= max_order; ++b) keep(complete_bipartite_graph(a, b));
    for (int a = 3; 2 * a <= max_order; ++a) keep(crown_graph(a));
    for (int d = 2; (1 << d) <= max_order; ++d) keep(hypercube_graph(d));
    for (int m = 2; m <= max_order; ++m) keep(path_graph(m));

    // Bipartite doubles of small connected non-bipartite graphs (these
    // doubles are connected and bipartite by construction).
    for (const Graph& g : all_graphs_up_to(std::min(7, max_order / 2)))
        if (is_connected(g) && !is_bipartite(g))
            keep(canonical_double_cover(g, cfg.vertex_cap).graph);

    // Seeded random connected bipartite samples on the larger orders.
    for (int n = 9; n <= max_order; ++n) {
        std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ull * n));
        int found = 0;
        for (int trial = 0; trial < 400 && found < 60; ++trial) {
            int a = 1 + static_cast<int>(rng() % (n - 1));
            Graph g(n);
            for (int u = 0; u < a; ++u)
                for (int v = a; v < n; ++v)
                    if (rng() & 1) g.add_edge(u, v);
            if (!is_connected(g)) continue;
            ++found;
            keep(std::move(g));
        }
    }
    return finalize_sorted(pool);
}

}  // namespace stab
