#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "stab/error.hpp"
#include "stab/graph.hpp"

using namespace stab;

TEST_CASE("basic construction and adjacency") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbours(2) == std::vector<int>{0, 3});

    // Re-adding an edge is idempotent.
    g.add_edge(3, 2);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(Graph(0), parse_error);
    CHECK_THROWS_AS(Graph(-3), parse_error);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), parse_error);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 3), std::exception);
    CHECK_THROWS_AS((void)g.adjacent(-1, 0), std::exception);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::exception);
}

TEST_CASE("named families have the expected size and degree") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(valency(complete_graph(5)) == 4);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(valency(cycle_graph(6)) == 2);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK_FALSE(is_regular(path_graph(3)));
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(valency(empty_graph(4)) == 0);
    CHECK(k2().edge_count() == 1);
    CHECK(complete_bipartite_graph(3, 4).edge_count() == 12);
    CHECK(petersen_graph().order() == 10);
    CHECK(petersen_graph().edge_count() == 15);
    CHECK(valency(petersen_graph()) == 3);
    CHECK(hypercube_graph(3).order() == 8);
    CHECK(hypercube_graph(3).edge_count() == 12);
    CHECK(valency(circulant_graph(7, {1, 2})) == 4);
    CHECK_THROWS_AS(cycle_graph(2), parse_error);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(petersen_graph()));
    CHECK(is_connected(complete_graph(1)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    Graph two = disjoint_union(cycle_graph(3), cycle_graph(4));
    CHECK_FALSE(is_connected(two));
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 4);
    CHECK(components(complete_graph(4)).size() == 1);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(complete_bipartite_graph(2, 3)));
    CHECK(is_bipartite(empty_graph(3)));
    CHECK(is_bipartite(path_graph(1)));
    CHECK_FALSE(is_bipartite(complete_graph(3)));

    auto bp = bipartition(hypercube_graph(2));
    REQUIRE(bp.has_value());
    const Graph q2 = hypercube_graph(2);
    for (int u = 0; u < q2.order(); ++u)
        for (int v : q2.neighbours(u)) CHECK(bp->side[u] != bp->side[v]);
    CHECK_FALSE(bipartition(petersen_graph()).has_value());
}

TEST_CASE("thinness") {
    CHECK(is_r_thin(complete_graph(4)));
    CHECK(is_r_thin(cycle_graph(5)));
    CHECK(is_r_thin(petersen_graph()));
    CHECK_FALSE(is_r_thin(cycle_graph(4)));  // opposite vertices twin
    CHECK_FALSE(is_r_thin(complete_bipartite_graph(2, 3)));
    CHECK_FALSE(is_r_thin(empty_graph(2)));  // two vertices with empty nbhd
    CHECK(is_r_thin(empty_graph(1)));

    auto w = thick_witness(cycle_graph(4));
    REQUIRE(w.has_value());
    auto [a, b] = *w;
    CHECK(a != b);
    CHECK(cycle_graph(4).neighbours(a) == cycle_graph(4).neighbours(b));
    CHECK_FALSE(thick_witness(complete_graph(5)).has_value());
}

TEST_CASE("odd cycles in every component") {
    CHECK(has_odd_cycle_in_every_component(cycle_graph(3)));
    CHECK_FALSE(has_odd_cycle_in_every_component(cycle_graph(4)));
    CHECK(has_odd_cycle_in_every_component(disjoint_union(cycle_graph(3), cycle_graph(5))));
    CHECK_FALSE(has_odd_cycle_in_every_component(disjoint_union(cycle_graph(3), cycle_graph(4))));
    CHECK_FALSE(has_odd_cycle_in_every_component(complete_graph(1)));  // isolated vertex
    CHECK_FALSE(has_odd_cycle_in_every_component(disjoint_union(complete_graph(3), k2())));
}

TEST_CASE("complement and union") {
    Graph c = complement_graph(cycle_graph(5));
    CHECK(c.edge_count() == 5);
    CHECK(oracle::are_isomorphic_brute(c, cycle_graph(5)));  // C_5 self-complementary
    CHECK(complement_graph(complete_graph(4)).edge_count() == 0);
    Graph u = disjoint_union(complete_graph(3), empty_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 3);
    CHECK(min_degree(u) == 0);
    CHECK(min_degree(complete_graph(4)) == 3);
}

TEST_CASE("relabel and induced subgraphs") {
    Graph p = path_graph(4);  // 0-1-2-3
    Graph r = relabel(p, {3, 1, 0, 2});
    CHECK(r.adjacent(3, 1));
    CHECK(r.adjacent(1, 0));
    CHECK(r.adjacent(0, 2));
    CHECK(r.edge_count() == 3);
    CHECK(oracle::are_isomorphic_brute(p, r));
    CHECK_THROWS_AS(relabel(p, {0, 0, 1, 2}), std::exception);

    Graph sub = induced_subgraph(petersen_graph(), {0, 1, 2, 3, 4});  // outer 5-cycle
    CHECK(oracle::are_isomorphic_brute(sub, cycle_graph(5)));
}

TEST_CASE("from_edges round trip") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}, {1, 2}});
    CHECK(g.edge_count() == 3);  // duplicate collapsed
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(is_connected(g));
}
