#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "stab/enumerate.hpp"
#include "stab/error.hpp"
#include "stab/graph_io.hpp"

using namespace stab;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("hand-decoded graph6 fixtures") {
    // "@" : K_1.
    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    // "A_" : single edge.
    Graph e = parse_graph6("A_");
    CHECK(e.order() == 2);
    CHECK(e.adjacent(0, 1));

    // "B?" : three isolated vertices.
    Graph e3 = parse_graph6("B?");
    CHECK(e3.order() == 3);
    CHECK(e3.edge_count() == 0);

    // "C~" : K_4 (all six bits set).
    Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);

    // "DQ{" : bowtie; decoded by hand from the bit layout.
    Graph bow = parse_graph6("DQ{");
    CHECK(bow.order() == 5);
    CHECK(bow.edge_count() == 6);
    CHECK(bow.adjacent(0, 2));
    CHECK(bow.adjacent(1, 3));
    CHECK(bow.adjacent(0, 4));
    CHECK(bow.adjacent(1, 4));
    CHECK(bow.adjacent(2, 4));
    CHECK(bow.adjacent(3, 4));
    CHECK(bow.degree(4) == 4);
}

TEST_CASE("graph6 round trips and cross-checked encoder") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            std::string mine = emit_graph6(g);
            CHECK(mine == oracle::naive_graph6(g));
            Graph back = parse_graph6(mine);
            CHECK(back == g);
        }
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("C"), parse_error);     // truncated body
    CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);   // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A`"), parse_error);    // nonzero padding
    CHECK_THROWS_AS(parse_graph6("A\x1f"), parse_error); // byte below range
    CHECK_THROWS_AS(parse_graph6(" A_"), parse_error);
}

TEST_CASE("graph6 medium form") {
    Graph e63 = empty_graph(63);
    std::string s = emit_graph6(e63);
    CHECK(s.rfind("~??~", 0) == 0);  // 126, then 18-bit order = 63
    Graph back = parse_graph6(s);
    CHECK(back.order() == 63);
    CHECK(back.edge_count() == 0);

    Graph c70 = cycle_graph(70);
    Graph c70back = parse_graph6(emit_graph6(c70));
    CHECK(c70back == c70);
}

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("3 0 1 1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    Graph dup = parse_edge_list("4\n0 1\n0 1\n2 3\n");
    CHECK(dup.edge_count() == 2);
    CHECK_THROWS_AS(parse_edge_list("3 0 0"), parse_error);       // loop
    CHECK_THROWS_AS(parse_edge_list("3 0"), parse_error);         // dangling endpoint
    CHECK_THROWS_AS(parse_edge_list("3 0 7"), parse_error);       // out of range
    CHECK_THROWS_AS(parse_edge_list("x 0 1"), parse_error);       // bad order token
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);

    Graph g = parse_edge_list(emit_edge_list(petersen_graph()));
    CHECK(g == petersen_graph());
}

TEST_CASE("file reading with format hints") {
    auto g6 = write_temp("stab_t_a.g6", emit_graph6(cycle_graph(5)) + "\n");
    CHECK(read_graph_file(g6.string()) == cycle_graph(5));

    auto el = write_temp("stab_t_b.el", emit_edge_list(complete_graph(4)));
    CHECK(read_graph_file(el.string()) == complete_graph(4));

    // Auto-detection without a helpful extension.
    auto raw = write_temp("stab_t_c.txt", emit_graph6(petersen_graph()));
    CHECK(read_graph_file(raw.string()) == petersen_graph());
    auto rawel = write_temp("stab_t_d.txt", "3 0 1");
    CHECK(read_graph_file(rawel.string()).edge_count() == 1);

    CHECK_THROWS_AS(read_graph_file("/nonexistent/nowhere.g6"), std::exception);
    std::filesystem::remove(g6);
    std::filesystem::remove(el);
    std::filesystem::remove(raw);
    std::filesystem::remove(rawel);
}

TEST_CASE("named graphs") {
    REQUIRE(named_graph("petersen").has_value());
    CHECK(*named_graph("petersen") == petersen_graph());
    CHECK(*named_graph("Petersen") == petersen_graph());
    CHECK(*named_graph("cube") == hypercube_graph(3));
    CHECK(*named_graph("q4") == hypercube_graph(4));
    CHECK(*named_graph("K5") == complete_graph(5));
    CHECK(*named_graph("c7") == cycle_graph(7));
    CHECK(*named_graph("p4") == path_graph(4));
    CHECK(*named_graph("e6") == empty_graph(6));
    CHECK(*named_graph("k3,4") == complete_bipartite_graph(3, 4));
    CHECK_FALSE(named_graph("c2").has_value());
    CHECK_FALSE(named_graph("frobnitz").has_value());
    CHECK_FALSE(named_graph("k").has_value());
    CHECK_FALSE(named_graph("k99999").has_value());
}

TEST_CASE("argument resolution precedence") {
    // A file whose name collides with a built-in name: the file wins.
    auto p = write_temp("k4", emit_graph6(cycle_graph(5)));
    CHECK(resolve_graph_arg(p.string()) == cycle_graph(5));
    std::filesystem::remove(p);

    CHECK(resolve_graph_arg("k4") == complete_graph(4));
    CHECK(resolve_graph_arg("DQ{") == parse_graph6("DQ{"));
    CHECK_THROWS_AS(resolve_graph_arg("definitely not a graph"), parse_error);
}

TEST_CASE("canonical emission separates isomorphism classes") {
    // Equal canonical strings exactly for isomorphic graphs, cross-checked
    // against the brute-force minimum-matrix canonical form.
    for (const Graph& g : all_graphs(5))
        for (const Graph& h : all_graphs(5)) {
            bool same_lib = emit_graph6_canonical(g) == emit_graph6_canonical(h);
            bool same_brute =
                oracle::brute_canonical_string(g) == oracle::brute_canonical_string(h);
            CHECK(same_lib == same_brute);
        }
}

TEST_CASE("read_lines") {
    auto p = write_temp("stab_t_lines.txt", "one\ntwo\n\nthree");
    auto lines = read_lines(p.string());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "one");
    CHECK(lines[2].empty());
    CHECK(lines[3] == "three");
    std::filesystem::remove(p);
    CHECK_THROWS_AS(read_lines("/nonexistent/nowhere.txt"), std::exception);
}
