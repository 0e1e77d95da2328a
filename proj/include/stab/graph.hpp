#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace stab {

// Finite simple undirected graph on vertices 0..n-1.  Adjacency is stored as
// n bit rows of n bits each; row v is the neighbourhood N(v).  Rows are kept
// symmetric and loop-free by construction; there is no edge removal, so a
// built graph never leaves that state.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int row_words() const { return words_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);

    const std::uint64_t* row(int v) const {
        check_vertex(v);
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }

    int degree(int v) const;
    long long edge_count() const;

    std::vector<int> neighbours(int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;

    void check_vertex(int v) const;
};

// Two-sided vertex labelling with every edge joining side 0 to side 1.
struct Bipartition {
    std::vector<std::uint8_t> side;
};

// ---- constructions --------------------------------------------------------

Graph empty_graph(int m);
Graph complete_graph(int m);
Graph cycle_graph(int m);        // m >= 3
Graph path_graph(int m);         // m >= 1 vertices, m-1 edges
Graph k2();
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();
Graph hypercube_graph(int d);    // 2^d vertices, d >= 1
Graph circulant_graph(int n, const std::vector<int>& connections);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement_graph(const Graph& g);

// New graph with vertex v of g renamed to image[v]; image must be a bijection.
Graph relabel(const Graph& g, const std::vector<int>& image);

// Subgraph induced on `keep` (distinct vertices); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// ---- structural predicates ------------------------------------------------

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// A proper 2-sided colouring if one exists (graph bipartite), else nullopt.
// Deterministic: BFS from the smallest vertex of each component, root on side 0.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Common degree if the graph is regular, else nullopt.
std::optional<int> valency(const Graph& g);
bool is_regular(const Graph& g);

// R-thin: all closed-neighbourhood-free duplicates absent, i.e. no two
// distinct vertices share exactly the same (open) neighbourhood.
bool is_r_thin(const Graph& g);
std::optional<std::pair<int, int>> thick_witness(const Graph& g);

// True when every component contains an odd cycle (equivalently, no
// component is bipartite).  An isolated vertex fails the condition.
bool has_odd_cycle_in_every_component(const Graph& g);

int min_degree(const Graph& g);

}  // namespace stab
