#include "stab/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "stab/autgroup.hpp"
#include "stab/enumerate.hpp"
#include "stab/error.hpp"
#include "stab/graph_io.hpp"
#include "stab/product.hpp"

namespace stab {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::kPass: return "pass";
        case CheckStatus::kFail: return "fail";
        case CheckStatus::kSkipped: return "skipped";
    }
    return "?";
}

namespace {

CheckResult skip(const std::string& why) { return {CheckStatus::kSkipped, why}; }

std::string orders_text(const OrderTriple& o) {
    return "|A(gamma)|=" + o.gamma.get_str() + " |A(sigma)|=" + o.sigma.get_str() +
           " |A(product)|=" + o.product.get_str();
}

// Runs f(0..count-1) on `jobs` workers; the first exception wins and is
// rethrown after all workers finish.
template <typename F>
void parallel_for(int count, int jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> workers;
    int w = std::min(jobs, count);
    workers.reserve(w);
    for (int j = 0; j < w; ++j) workers.emplace_back(worker);
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

CheckResult verify_pair_transfer_biconditional(const Graph& gamma, const Graph& sigma,
                                               const RunConfig& cfg) {
    auto vg = valency(gamma), vs = valency(sigma);
    if (!vg || !vs) return skip("a factor is not regular");
    if (std::gcd(*vg, *vs) != 1) return skip("valencies share a common factor");
    if (!is_vertex_transitive(sigma, limits_from(cfg)))
        return skip("second factor is not vertex-transitive");
    if (!is_connected(sigma)) return skip("second factor is disconnected");
    if (!is_r_thin(sigma)) return skip("second factor has duplicate neighbourhoods");
    if (!is_bipartite(sigma)) return skip("second factor is not bipartite");

    StabilityVerdict pair = classify_pair(gamma, sigma, cfg);
    StabilityVerdict single = classify_graph(gamma, cfg);
    if (pair.kind == VerdictKind::kUnstableUnclassified ||
        single.kind == VerdictKind::kUnstableUnclassified)
        return skip("coprimality undecided within bounds");

    bool lhs = pair.kind == VerdictKind::kNontriviallyUnstable;
    bool rhs = single.kind == VerdictKind::kNontriviallyUnstable;
    std::string details = "pair=" + verdict_kind_name(pair.kind) +
                          " graph=" + verdict_kind_name(single.kind) + "; " +
                          orders_text(pair.orders);
    return {lhs == rhs ? CheckStatus::kPass : CheckStatus::kFail, details};
}

CheckResult verify_pair_transfer_exclusion(const Graph& gamma, const Graph& sigma,
                                           const RunConfig& cfg) {
    auto vg = valency(gamma), vs = valency(sigma);
    if (!vg || !vs) return skip("a factor is not regular");
    if (std::gcd(*vg, *vs) != 1) return skip("valencies share a common factor");
    if (!is_vertex_transitive(sigma, limits_from(cfg)))
        return skip("second factor is not vertex-transitive");
    if (is_connected(sigma) && is_r_thin(sigma) && is_bipartite(sigma))
        return skip("second factor is connected, thin and bipartite; exclusion does not apply");

    StabilityVerdict pair = classify_pair(gamma, sigma, cfg);
    if (pair.kind == VerdictKind::kUnstableUnclassified)
        return skip("coprimality undecided within bounds");
    std::string details = "pair=" + verdict_kind_name(pair.kind) + "; " + orders_text(pair.orders);
    return {pair.kind != VerdictKind::kNontriviallyUnstable ? CheckStatus::kPass
                                                            : CheckStatus::kFail,
            details};
}

CheckResult verify_complete_partner(const Graph& gamma, int m, const RunConfig& cfg) {
    if (m < 3) return skip("partner order below 3");
    auto vg = valency(gamma);
    if (!vg) return skip("graph is not regular");
    if (std::gcd(*vg, m - 1) != 1) return skip("valency shares a factor with m-1");
    if (aut_order(gamma, limits_from(cfg)) == 1) return skip("graph has no nontrivial symmetry");

    VerdictKind expected = (is_connected(gamma) && is_r_thin(gamma))
                               ? VerdictKind::kStable
                               : VerdictKind::kTriviallyUnstable;
    StabilityVerdict got = classify_pair(gamma, complete_graph(m), cfg);
    std::string details = "m=" + std::to_string(m) + " expected=" + verdict_kind_name(expected) +
                          " got=" + verdict_kind_name(got.kind) + "; " + orders_text(got.orders);
    return {got.kind == expected ? CheckStatus::kPass : CheckStatus::kFail, details};
}

CheckResult verify_cycle_partner(const Graph& gamma, int m, const RunConfig& cfg) {
    if (m < 3) return skip("partner order below 3");
    auto vg = valency(gamma);
    if (!vg || *vg % 2 == 0) return skip("graph is not regular of odd valency");
    if (!is_connected(gamma)) return skip("graph is disconnected");
    if (!is_r_thin(gamma)) return skip("graph has duplicate neighbourhoods");
    if (aut_order(gamma, limits_from(cfg)) == 1) return skip("graph has no nontrivial symmetry");

    StabilityVerdict got = classify_pair(gamma, cycle_graph(m), cfg);
    std::string prefix = "m=" + std::to_string(m) + " got=" + verdict_kind_name(got.kind);
    if (m % 2 == 1) {
        return {got.kind == VerdictKind::kStable ? CheckStatus::kPass : CheckStatus::kFail,
                prefix + " expected=stable; " + orders_text(got.orders)};
    }
    if (m == 4) {
        return {got.kind == VerdictKind::kTriviallyUnstable ? CheckStatus::kPass
                                                            : CheckStatus::kFail,
                prefix + " expected=trivially-unstable; " + orders_text(got.orders)};
    }
    StabilityVerdict single = classify_graph(gamma, cfg);
    if (got.kind == VerdictKind::kUnstableUnclassified ||
        single.kind == VerdictKind::kUnstableUnclassified)
        return skip("coprimality undecided within bounds");
    return {got.kind == single.kind ? CheckStatus::kPass : CheckStatus::kFail,
            prefix + " expected=graph-class=" + verdict_kind_name(single.kind) + "; " +
                orders_text(got.orders)};
}

// ---- complete-partner scan ------------------------------------------------

ScanReport complete_partner_scan(const std::vector<std::string>& corpus_g6, int m_lo, int m_hi,
                                 const RunConfig& cfg) {
    if (m_lo < 3 || m_hi < m_lo) throw parse_error("partner range must satisfy 3 <= m_lo <= m_hi");
    ScanReport report;
    report.scan_name = "complete-partner";
    report.config = cfg;

    struct Instance {
        int graph_idx;
        int m;  // 0 = graph-level skip record
        std::string note;
    };
    std::vector<std::optional<Graph>> graphs(corpus_g6.size());
    std::vector<Instance> instances;

    for (std::size_t gi = 0; gi < corpus_g6.size(); ++gi) {
        const std::string& line = corpus_g6[gi];
        try {
            graphs[gi] = parse_graph6(line);
        } catch (const parse_error& e) {
            instances.push_back({static_cast<int>(gi), 0, std::string("unparseable: ") + e.what()});
            continue;
        }
        const Graph& g = *graphs[gi];
        if (!is_connected(g)) {
            instances.push_back({static_cast<int>(gi), 0, "graph is disconnected"});
            continue;
        }
        if (!is_r_thin(g)) {
            instances.push_back({static_cast<int>(gi), 0, "graph has duplicate neighbourhoods"});
            continue;
        }
        PermGroup group = automorphism_group(g, limits_from(cfg));
        if (group.order() == 1) {
            instances.push_back({static_cast<int>(gi), 0, "graph has no nontrivial symmetry"});
            continue;
        }
        if (!is_arc_transitive(g, limits_from(cfg))) {
            instances.push_back({static_cast<int>(gi), 0, "graph is not arc-transitive"});
            continue;
        }
        for (int m = m_lo; m <= m_hi; ++m) instances.push_back({static_cast<int>(gi), m, ""});
    }

    report.records.resize(instances.size());
    parallel_for(static_cast<int>(instances.size()), cfg.jobs, [&](int i) {
        const Instance& inst = instances[i];
        ScanRecord rec;
        rec.index = i;
        rec.graph_id = corpus_g6[inst.graph_idx];
        auto t0 = std::chrono::steady_clock::now();
        if (inst.m == 0) {
            rec.partner_id = "-";
            rec.status = "skipped";
            rec.note = inst.note;
        } else {
            rec.partner_id = "k" + std::to_string(inst.m);
            const Graph& g = *graphs[inst.graph_idx];
            CoprimalityAnswer cop = coprimality(g, complete_graph(inst.m), cfg);
            if (cop.status != CoprimalityAnswer::Status::kCoprime) {
                rec.status = "skipped";
                rec.note = "coprimality: " + coprimality_status_name(cop.status) + " (" +
                           cop.reason + ")";
            } else {
                StabilityVerdict v = classify_pair(g, complete_graph(inst.m), cfg);
                rec.status = "evaluated";
                rec.kind = verdict_kind_name(v.kind);
                rec.order_gamma = v.orders.gamma.get_str();
                rec.order_sigma = v.orders.sigma.get_str();
                rec.order_product = v.orders.product.get_str();
                if (v.kind != VerdictKind::kStable) {
                    rec.counterexample = true;
                    rec.note = "expected stable";
                }
            }
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                t0)
                          .count();
        report.records[i] = std::move(rec);
    });

    for (const ScanRecord& rec : report.records) {
        if (rec.status == "evaluated") ++report.evaluated;
        else ++report.skipped;
        if (rec.counterexample) report.counterexample_indices.push_back(rec.index);
    }
    return report;
}

// ---- law sweep ------------------------------------------------------------

LawSweepReport law_sweep(int order_cap, const RunConfig& cfg) {
    if (order_cap < 1 || order_cap > 6) throw parse_error("law sweep supports order caps 1..6");
    LawSweepReport report;
    auto violation = [&](const std::string& what) { report.violations.push_back(what); };

    std::vector<Graph> graphs = all_graphs_up_to(order_cap);
    std::vector<std::string> ids;
    ids.reserve(graphs.size());
    for (const Graph& g : graphs) ids.push_back(emit_graph6(g));

    // Product laws over all ordered factor pairs.
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = 0; j < graphs.size(); ++j) {
            const Graph& a = graphs[i];
            const Graph& b = graphs[j];
            ProductGraph p = direct_product(a, b, cfg.vertex_cap);
            ++report.pair_checks;
            std::string id = ids[i] + " x " + ids[j];

            bool product_nonbip = !is_bipartite(p.graph);
            if (product_nonbip != (!is_bipartite(a) && !is_bipartite(b)))
                violation("bipartite law broken for " + id);

            if (min_degree(a) >= 1 && min_degree(b) >= 1) {
                if (is_r_thin(p.graph) != (is_r_thin(a) && is_r_thin(b)))
                    violation("thinness law broken for " + id);
            }

            if (a.order() >= 2 && b.order() >= 2 && is_connected(a) && is_connected(b)) {
                bool expect_connected = !is_bipartite(a) || !is_bipartite(b);
                if (is_connected(p.graph) != expect_connected)
                    violation("connectivity law broken for " + id);
            }

            bool degree_ok = true;
            for (int u = 0; u < a.order() && degree_ok; ++u)
                for (int x = 0; x < b.order() && degree_ok; ++x)
                    if (p.graph.degree(p.index(u, x)) != a.degree(u) * b.degree(x))
                        degree_ok = false;
            if (!degree_ok) violation("degree law broken for " + id);
        }

    // Single-graph witness laws.
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        ++report.single_checks;
        try {
            auto witness = find_two_fold(g, cfg);
            auto [st, orders] = is_stable_graph(g, cfg);
            (void)orders;
            // A nontrivial witness always forces instability.  The converse
            // (unstable implies a witness) needs the double cover to stay
            // connected, i.e. a connected non-bipartite graph; K_2 is the
            // smallest unstable graph with no witness.
            if (witness.has_value() && st)
                violation("witness on a stable graph " + ids[i]);
            if (is_connected(g) && !is_bipartite(g) && !st && !witness.has_value())
                violation("unstable connected non-bipartite graph without witness " + ids[i]);
            if (witness) {
                TwoFoldAutomorphism w = *witness;
                TwoFoldAutomorphism sw = two_fold_swap(g, w);
                TwoFoldAutomorphism inv = two_fold_inverse(g, w);
                TwoFoldAutomorphism comp = two_fold_compose(g, w, inv);
                if (!(comp.alpha == compose(w.alpha, inv.alpha)))
                    violation("composition mismatch for " + ids[i]);
                if (!(two_fold_swap(g, sw).alpha == w.alpha && two_fold_swap(g, sw).beta == w.beta))
                    violation("swap is not an involution for " + ids[i]);
                // A nontrivial pair with an automorphism on one side forces
                // an identity-sided pair, which requires duplicate
                // neighbourhoods.
                if (is_automorphism(g, w.alpha)) {
                    Perm ai = w.alpha.inverse();
                    TwoFoldAutomorphism shifted =
                        two_fold_compose(g, w, TwoFoldAutomorphism{ai, ai});
                    if (shifted.alpha.is_identity() && !shifted.beta.is_identity() &&
                        is_r_thin(g))
                        violation("identity-sided witness on a thin graph " + ids[i]);
                }
            }
        } catch (const std::exception& e) {
            violation("witness machinery threw for " + ids[i] + ": " + e.what());
        }
    }

    // Relabelling fuzz of the classifier.
    std::mt19937_64 rng(cfg.seed);
    int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const Graph& g = graphs[rng() % graphs.size()];
        Perm p = random_perm(g.order(), rng);
        Graph h = relabel(g, p.image());
        ++report.fuzz_trials;
        StabilityVerdict a = classify_graph(g, cfg);
        StabilityVerdict b = classify_graph(h, cfg);
        if (a.kind != b.kind || a.orders.gamma != b.orders.gamma ||
            a.orders.product != b.orders.product)
            violation("classifier not relabelling-invariant on " + emit_graph6(g));
    }
    return report;
}

}  // namespace stab
