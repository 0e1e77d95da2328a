#pragma once

#include <vector>

#include "stab/config.hpp"
#include "stab/graph.hpp"

namespace stab {

// All graphs of order n up to isomorphism (one representative each), in a
// deterministic order.  Memoised; n is capped at 8 (12346 graphs).
const std::vector<Graph>& all_graphs(int n);
std::vector<Graph> all_graphs_up_to(int n);

// All k-regular graphs of order n up to isomorphism, optionally connected
// only.  Backtracking generator with canonical-form deduplication; n <= 12.
std::vector<Graph> regular_graphs(int n, int k, bool connected_only);
std::vector<Graph> regular_graphs_up_to(int n, bool connected_only);

// Vertex-transitive graphs of order <= n (n <= 8), disconnected ones
// included: filtered from the full enumeration.
std::vector<Graph> vertex_transitive_graphs_up_to(int n);

// Connected arc-transitive graphs with at least one edge, of order <=
// max_order (<= 20): complete/cycle/bipartite families, circulants,
// hypercubes and the Petersen graph, filtered by an explicit arc-transitivity
// check and deduplicated.  Deterministic.
std::vector<Graph> internal_arc_transitive_corpus(int max_order, const RunConfig& cfg);

// Connected bipartite graphs of order <= max_order (<= 14): exhaustive up to
// order 8, then structured families (even cycles, complete bipartite, crowns,
// hypercubes, paths, bipartite doubles) plus seeded random samples.
// Deterministic for a fixed cfg.seed.
std::vector<Graph> internal_bipartite_corpus(int max_order, const RunConfig& cfg);

}  // namespace stab
