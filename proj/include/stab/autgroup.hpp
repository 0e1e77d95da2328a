#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "stab/config.hpp"
#include "stab/graph.hpp"
#include "stab/permgroup.hpp"

namespace stab {

// Vertex colouring constraining a search: only maps preserving the colour of
// every vertex are considered.  Labels are arbitrary ints.
struct Coloring {
    std::vector<int> color;

    static Coloring uniform(int n) { return Coloring{std::vector<int>(n, 0)}; }
};

struct SearchLimits {
    std::uint64_t node_budget = 10'000'000;
};

inline SearchLimits limits_from(const RunConfig& cfg) { return SearchLimits{cfg.node_budget}; }

// Coarsest equitable refinement of `initial`: within a returned class, every
// vertex has the same number of neighbours in every class.  Classes only
// split (each refined class lies inside one initial class).  Returned labels
// are the class indices in partition order.
Coloring refine(const Graph& g, const Coloring& initial);

// Automorphism group of g, optionally restricted to colour-preserving maps.
// Backtracking over individualization-refinement with orbit pruning against
// the group found so far and subtree translation; every returned generator
// is re-verified as a colour-preserving automorphism before it is reported.
// Exceeding the node budget raises resource_error.
PermGroup automorphism_group(const Graph& g, const Coloring& fixed,
                             const SearchLimits& limits = {});
PermGroup automorphism_group(const Graph& g, const SearchLimits& limits = {});

mpz_class aut_order(const Graph& g, const SearchLimits& limits = {});

// Canonical representative of the isomorphism class: canonical_form(g) ==
// canonical_form(h) iff g and h are isomorphic (as a graph equality check).
Graph canonical_form(const Graph& g, const SearchLimits& limits = {});

bool is_vertex_transitive(const Graph& g, const SearchLimits& limits = {});
bool is_arc_transitive(const Graph& g, const SearchLimits& limits = {});

}  // namespace stab
