#include "stab/product.hpp"

#include <string>

#include "stab/error.hpp"

namespace stab {

ProductGraph direct_product(const Graph& a, const Graph& b, int vertex_cap) {
    long long n = static_cast<long long>(a.order()) * b.order();
    if (n > vertex_cap)
        throw resource_error("product would have " + std::to_string(n) +
                             " vertices, above the cap of " + std::to_string(vertex_cap));
    Graph g(static_cast<int>(n));
    int n2 = b.order();
    for (int u = 0; u < a.order(); ++u)
        for (int v : a.neighbours(u)) {
            if (u > v) continue;
            for (int x = 0; x < n2; ++x)
                for (int y : b.neighbours(x)) {
                    if (x > y) continue;
                    g.add_edge(u * n2 + x, v * n2 + y);
                    g.add_edge(u * n2 + y, v * n2 + x);
                }
        }
    return ProductGraph{std::move(g), a.order(), b.order()};
}

ProductGraph canonical_double_cover(const Graph& g, int vertex_cap) {
    return direct_product(g, k2(), vertex_cap);
}

std::vector<int> fiber(const ProductGraph& p, int i) {
    if (i < 0 || i >= p.n2) throw parse_error("fibre index out of range");
    std::vector<int> out;
    out.reserve(p.n1);
    for (int u = 0; u < p.n1; ++u) out.push_back(p.index(u, i));
    return out;
}

Coloring fiber_coloring(const ProductGraph& p) {
    Coloring c;
    c.color.resize(p.graph.order());
    for (int idx = 0; idx < p.graph.order(); ++idx) c.color[idx] = idx % p.n2;
    return c;
}

}  // namespace stab
