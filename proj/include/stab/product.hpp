#pragma once

#include <utility>
#include <vector>

#include "stab/autgroup.hpp"
#include "stab/graph.hpp"

namespace stab {

// Direct (tensor) product of two factor graphs.  Vertex (u, x) of the
// product, with u in the first factor and x in the second, gets index
// u * n2 + x; (u, x) ~ (v, y) iff u ~ v and x ~ y in the factors.
struct ProductGraph {
    Graph graph;
    int n1;
    int n2;

    int index(int u, int x) const { return u * n2 + x; }
    std::pair<int, int> coords(int idx) const { return {idx / n2, idx % n2}; }
};

// Builds the product; refuses to allocate more than `vertex_cap` vertices
// (resource_error), so callers cannot silently drown in a huge product.
ProductGraph direct_product(const Graph& a, const Graph& b, int vertex_cap = 4096);

// Product with a single edge (K_2): the bipartite double.
ProductGraph canonical_double_cover(const Graph& g, int vertex_cap = 4096);

// Vertices whose second coordinate is i, ascending.
std::vector<int> fiber(const ProductGraph& p, int i);

// One colour per second coordinate; automorphisms preserving this colouring
// are exactly the maps acting fibre-by-fibre.
Coloring fiber_coloring(const ProductGraph& p);

}  // namespace stab
