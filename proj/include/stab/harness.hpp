#pragma once

#include <string>
#include <vector>

#include "stab/config.hpp"
#include "stab/graph.hpp"
#include "stab/stability.hpp"

namespace stab {

enum class CheckStatus { kPass, kFail, kSkipped };
std::string check_status_name(CheckStatus s);

struct CheckResult {
    CheckStatus status;
    std::string details;
};

// For regular factor pairs with coprime valencies and a vertex-transitive,
// connected, thin, bipartite second factor: the pair is nontrivially
// unstable iff the first factor is.  Hypothesis violations are reported as
// kSkipped, never as failures.
CheckResult verify_pair_transfer_biconditional(const Graph& gamma, const Graph& sigma,
                                               const RunConfig& cfg = {});

// For regular, coprime-valency, vertex-transitive second factors that are
// disconnected, have duplicate neighbourhoods, or are non-bipartite: the
// pair is never nontrivially unstable.
CheckResult verify_pair_transfer_exclusion(const Graph& gamma, const Graph& sigma,
                                           const RunConfig& cfg = {});

// Pairing a regular graph (nontrivial automorphisms, valency coprime to
// m-1) with the complete graph K_m, m >= 3: stable iff connected and thin,
// otherwise trivially unstable.
CheckResult verify_complete_partner(const Graph& gamma, int m, const RunConfig& cfg = {});

// Pairing an odd-valency connected thin regular graph (nontrivial
// automorphisms) with the cycle C_m: stable for odd m >= 3; trivially
// unstable for m = 4; for even m >= 6 the pair's class equals the graph's
// own class.
CheckResult verify_cycle_partner(const Graph& gamma, int m, const RunConfig& cfg = {});

struct ScanRecord {
    int index = 0;
    std::string graph_id;    // graph6 of the first factor (as given)
    std::string partner_id;  // e.g. "k4"
    std::string status;      // "evaluated" | "skipped"
    std::string note;        // skip reason or counterexample note
    std::string kind;        // verdict kind when evaluated
    std::string order_gamma, order_sigma, order_product;
    double wall_ms = 0.0;
    bool counterexample = false;
};

struct ScanReport {
    std::string scan_name;
    RunConfig config;
    std::vector<ScanRecord> records;
    int evaluated = 0;
    int skipped = 0;
    std::vector<int> counterexample_indices;
};

// Pairs every corpus graph (graph6 lines; unparseable or non-qualifying
// lines become skip records) with K_m for m_lo <= m <= m_hi and records the
// verdicts.  Qualifying means: connected, arc-transitive, thin, nontrivial
// automorphisms, and provably coprime to K_m.  Any verdict other than
// stable is flagged as a counterexample.  Deterministic given corpus order
// and config; cfg.jobs parallelises instances.
ScanReport complete_partner_scan(const std::vector<std::string>& corpus_g6, int m_lo, int m_hi,
                                 const RunConfig& cfg = {});

struct LawSweepReport {
    int pair_checks = 0;
    int single_checks = 0;
    int fuzz_trials = 0;
    std::vector<std::string> violations;
};

// Exhaustive product-law and witness-law checks over all graphs up to
// order_cap (pairs over both factors), plus seeded relabelling fuzz of the
// classifier.  Collects violations instead of throwing.
LawSweepReport law_sweep(int order_cap, const RunConfig& cfg = {});

}  // namespace stab
