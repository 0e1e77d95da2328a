#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "stab/error.hpp"
#include "stab/graph.hpp"
#include "stab/graph_io.hpp"
#include "stab/harness.hpp"

using namespace stab;

namespace {

Graph two_triangles() { return disjoint_union(complete_graph(3), complete_graph(3)); }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("complete-partner check") {
    CheckResult r = verify_complete_partner(petersen_graph(), 3);
    CHECK(r.status == CheckStatus::kPass);
    CHECK(contains(r.details, "expected=stable"));

    // Valency 3 shares a factor with m-1 = 3.
    CheckResult skip_val = verify_complete_partner(petersen_graph(), 4);
    CHECK(skip_val.status == CheckStatus::kSkipped);
    CHECK(contains(skip_val.details, "valency"));

    // Disconnected and duplicate-neighbourhood graphs land in the
    // trivially-unstable arm.
    CheckResult disc = verify_complete_partner(two_triangles(), 4);
    CHECK(disc.status == CheckStatus::kPass);
    CHECK(contains(disc.details, "expected=trivially-unstable"));
    CheckResult thick = verify_complete_partner(cycle_graph(4), 4);
    CHECK(thick.status == CheckStatus::kPass);
    CHECK(contains(thick.details, "expected=trivially-unstable"));

    CHECK(verify_complete_partner(path_graph(4), 3).status == CheckStatus::kSkipped);
    CHECK(verify_complete_partner(complete_graph(4), 2).status == CheckStatus::kSkipped);
    CHECK(verify_complete_partner(complete_graph(4), 4).status == CheckStatus::kSkipped);

    CheckResult k4k5 = verify_complete_partner(complete_graph(4), 5);
    CHECK(k4k5.status == CheckStatus::kPass);
    CHECK(contains(k4k5.details, "expected=stable"));
}

TEST_CASE("cycle-partner check") {
    for (int m : {3, 4, 5, 6, 7}) {
        CheckResult r = verify_cycle_partner(complete_graph(4), m);
        CHECK(r.status == CheckStatus::kPass);
    }
    // Frozen order for the even case: |Aut(K_4 x C_4)| = 12288.
    CHECK(contains(verify_cycle_partner(complete_graph(4), 4).details, "12288"));
    CHECK(contains(verify_cycle_partner(complete_graph(4), 6).details, "graph-class=stable"));

    CHECK(verify_cycle_partner(cycle_graph(5), 3).status == CheckStatus::kSkipped);  // even valency
    CHECK(verify_cycle_partner(parse_graph6("DQ{"), 3).status == CheckStatus::kSkipped);
    CHECK(verify_cycle_partner(disjoint_union(complete_graph(4), complete_graph(4)), 3).status ==
          CheckStatus::kSkipped);
    CheckResult thick = verify_cycle_partner(complete_bipartite_graph(3, 3), 3);
    CHECK(thick.status == CheckStatus::kSkipped);
    CHECK(contains(thick.details, "neighbourhood"));
}

TEST_CASE("pair-transfer biconditional check") {
    CHECK(verify_pair_transfer_biconditional(complete_graph(4), cycle_graph(6)).status ==
          CheckStatus::kPass);
    CHECK(verify_pair_transfer_biconditional(petersen_graph(), cycle_graph(6)).status ==
          CheckStatus::kPass);

    CHECK(verify_pair_transfer_biconditional(parse_graph6("DQ{"), cycle_graph(6)).status ==
          CheckStatus::kSkipped);  // first factor not regular
    CHECK(verify_pair_transfer_biconditional(complete_graph(4), complete_graph(4)).status ==
          CheckStatus::kSkipped);  // valencies not coprime
    CHECK(verify_pair_transfer_biconditional(complete_graph(4), cycle_graph(4)).status ==
          CheckStatus::kSkipped);  // second factor has duplicate neighbourhoods
    CHECK(verify_pair_transfer_biconditional(complete_graph(4), cycle_graph(5)).status ==
          CheckStatus::kSkipped);  // second factor not bipartite
}

TEST_CASE("pair-transfer exclusion check") {
    CheckResult thick_arm = verify_pair_transfer_exclusion(petersen_graph(), cycle_graph(4));
    CHECK(thick_arm.status == CheckStatus::kPass);
    CHECK(verify_pair_transfer_exclusion(complete_graph(4), complete_graph(3)).status ==
          CheckStatus::kPass);  // non-bipartite arm
    CHECK(verify_pair_transfer_exclusion(petersen_graph(), two_triangles()).status ==
          CheckStatus::kPass);  // disconnected arm

    CheckResult na = verify_pair_transfer_exclusion(complete_graph(4), cycle_graph(6));
    CHECK(na.status == CheckStatus::kSkipped);
    CHECK(contains(na.details, "does not apply"));
}

TEST_CASE("complete-partner scan") {
    std::vector<std::string> corpus = {
        "this-is-not-graph6",
        emit_graph6(cycle_graph(4)),
        emit_graph6(petersen_graph()),
        "DQ{",
        emit_graph6(complete_graph(1)),
    };
    ScanReport rep = complete_partner_scan(corpus, 3, 4);
    REQUIRE(rep.records.size() == 6);
    CHECK(rep.evaluated == 2);
    CHECK(rep.skipped == 4);
    CHECK(rep.counterexample_indices.empty());

    CHECK(rep.records[0].status == "skipped");
    CHECK(contains(rep.records[0].note, "unparseable"));
    CHECK(rep.records[1].status == "skipped");
    CHECK(contains(rep.records[1].note, "neighbourhood"));
    CHECK(rep.records[2].status == "evaluated");
    CHECK(rep.records[2].partner_id == "k3");
    CHECK(rep.records[2].kind == "stable");
    CHECK(rep.records[2].order_product == "720");
    CHECK(rep.records[3].partner_id == "k4");
    CHECK(rep.records[3].order_product == "2880");
    CHECK(contains(rep.records[4].note, "arc-transitive"));
    CHECK(contains(rep.records[5].note, "symmetry"));

    // Identical output with several workers.
    RunConfig par;
    par.jobs = 4;
    ScanReport rep2 = complete_partner_scan(corpus, 3, 4, par);
    REQUIRE(rep2.records.size() == rep.records.size());
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        CHECK(rep2.records[i].graph_id == rep.records[i].graph_id);
        CHECK(rep2.records[i].partner_id == rep.records[i].partner_id);
        CHECK(rep2.records[i].status == rep.records[i].status);
        CHECK(rep2.records[i].kind == rep.records[i].kind);
        CHECK(rep2.records[i].order_product == rep.records[i].order_product);
    }

    CHECK_THROWS_AS(complete_partner_scan(corpus, 2, 4), parse_error);
    CHECK_THROWS_AS(complete_partner_scan(corpus, 5, 4), parse_error);
}

TEST_CASE("law sweep is clean with frozen work counts") {
    LawSweepReport four = law_sweep(4);
    CHECK(four.pair_checks == 324);
    CHECK(four.single_checks == 18);
    CHECK(four.fuzz_trials == 1000);
    CHECK(four.violations.empty());

    LawSweepReport five = law_sweep(5);
    CHECK(five.pair_checks == 2704);
    CHECK(five.single_checks == 52);
    CHECK(five.fuzz_trials == 1000);
    CHECK(five.violations.empty());
}
