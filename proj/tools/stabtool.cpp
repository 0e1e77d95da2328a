// stabtool: decide stability of graphs and graph pairs under the direct
// product, inspect automorphism groups, hunt for instability witnesses and
// sweep verified statements over corpora.
//
// Exit codes: 0 success (including skipped checks), 1 bad input or usage,
// 2 resource limit hit, 3 failed check or counterexample found, 4 internal
// invariant violation.

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stab/autgroup.hpp"
#include "stab/config.hpp"
#include "stab/enumerate.hpp"
#include "stab/error.hpp"
#include "stab/graph.hpp"
#include "stab/graph_io.hpp"
#include "stab/harness.hpp"
#include "stab/json_io.hpp"
#include "stab/product.hpp"
#include "stab/stability.hpp"

namespace {

using stab::Json;

struct Outcome {
    Json result;
    std::string text;  // rendering for --format text
    std::string csv;   // rendering for --format csv; empty -> flattened result
    int exit_code = 0;
};

struct GraphInputs {
    std::string graph_arg;
    std::vector<std::string> pair_args;
};

void add_graph_inputs(CLI::App* sc, GraphInputs& in) {
    sc->add_option("--graph", in.graph_arg, "single graph: file, built-in name or graph6 literal");
    sc->add_option("--pair", in.pair_args, "two graphs: files, built-in names or graph6 literals")
        ->expected(2);
}

Json graph_summary(const stab::Graph& g, const stab::SearchLimits& limits) {
    Json j;
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["connected"] = stab::is_connected(g);
    j["bipartite"] = stab::is_bipartite(g);
    auto val = stab::valency(g);
    j["regular"] = val.has_value();
    if (val) j["valency"] = *val;
    j["thin"] = stab::is_r_thin(g);
    j["vertex_transitive"] = stab::is_vertex_transitive(g, limits);
    j["arc_transitive"] = stab::is_arc_transitive(g, limits);
    j["graph6_canonical"] = stab::emit_graph6_canonical(g, limits);
    return j;
}

Outcome run_stability(const GraphInputs& in, const std::string& fmt_in,
                      const stab::RunConfig& cfg) {
    stab::StabilityVerdict verdict;
    Json result;
    if (!in.graph_arg.empty()) {
        verdict = stab::classify_graph(stab::resolve_graph_arg(in.graph_arg, fmt_in), cfg);
        result["input"] = Json{{"graph", in.graph_arg}};
    } else if (in.pair_args.size() == 2) {
        verdict = stab::classify_pair(stab::resolve_graph_arg(in.pair_args[0], fmt_in),
                                      stab::resolve_graph_arg(in.pair_args[1], fmt_in), cfg);
        result["input"] = Json{{"pair", Json(in.pair_args)}};
    } else {
        throw stab::parse_error("stability: pass exactly one of --graph or --pair");
    }
    result["verdict"] = stab::verdict_to_json(verdict);
    return Outcome{result, stab::verdict_to_text(verdict), "", 0};
}

Outcome run_aut(const std::string& graph_arg, const std::string& fmt_in,
                const stab::RunConfig& cfg) {
    auto limits = stab::limits_from(cfg);
    stab::Graph g = stab::resolve_graph_arg(graph_arg, fmt_in);
    stab::PermGroup group = stab::automorphism_group(g, limits);
    Json result;
    result["input"] = graph_arg;
    result["graph"] = graph_summary(g, limits);
    result["group"] = stab::group_to_json(group);
    std::string text = "|Aut| = " + group.order().get_str() + " with " +
                       std::to_string(group.generators().size()) + " generators on " +
                       std::to_string(g.order()) + " vertices\n";
    return Outcome{result, text, "", 0};
}

Outcome run_product(const std::vector<std::string>& factors, const std::string& out_path,
                    const std::string& fmt_in, const stab::RunConfig& cfg) {
    stab::Graph a = stab::resolve_graph_arg(factors[0], fmt_in);
    stab::Graph b = stab::resolve_graph_arg(factors[1], fmt_in);
    stab::ProductGraph p = stab::direct_product(a, b, cfg.vertex_cap);
    std::string g6 = stab::emit_graph6(p.graph);

    Json meta;
    meta["n1"] = p.n1;
    meta["n2"] = p.n2;
    meta["order"] = p.graph.order();
    meta["edges"] = p.graph.edge_count();
    meta["indexing"] = "(u, x) -> u * n2 + x";
    meta["connected"] = stab::is_connected(p.graph);

    Json result = meta;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw stab::parse_error("cannot open output file: " + out_path);
        out << g6 << "\n";
        std::ofstream side(out_path + ".json");
        if (!side) throw stab::parse_error("cannot open sidecar file: " + out_path + ".json");
        side << meta.dump(2) << "\n";
        result["written_to"] = out_path;
    } else {
        result["graph6"] = g6;
    }
    std::string text = "product on " + std::to_string(p.graph.order()) + " vertices, " +
                       std::to_string(p.graph.edge_count()) + " edges\n" +
                       (out_path.empty() ? g6 + "\n" : "written to " + out_path + "\n");
    return Outcome{result, text, "", 0};
}

Outcome run_witness(const GraphInputs& in, const std::string& fmt_in,
                    const stab::RunConfig& cfg) {
    Json result;
    std::string text;
    if (!in.graph_arg.empty()) {
        stab::Graph g = stab::resolve_graph_arg(in.graph_arg, fmt_in);
        auto w = stab::find_two_fold(g, cfg);
        result["input"] = Json{{"graph", in.graph_arg}};
        result["searched"] = "nontrivial-two-fold-automorphism";
        result["found"] = w.has_value();
        if (w) result["witness"] = stab::two_fold_to_json(*w);
        text = w ? "nontrivial two-fold automorphism found\nalpha: " + w->alpha.one_line() +
                       "\nbeta:  " + w->beta.one_line() + "\n"
                 : "no nontrivial two-fold automorphism\n";
    } else if (in.pair_args.size() == 2) {
        stab::Graph a = stab::resolve_graph_arg(in.pair_args[0], fmt_in);
        stab::Graph b = stab::resolve_graph_arg(in.pair_args[1], fmt_in);
        auto w = stab::find_sigma_automorphism(a, b, cfg);
        result["input"] = Json{{"pair", Json(in.pair_args)}};
        result["searched"] = "non-diagonal-family";
        result["found"] = w.has_value();
        if (w) result["witness"] = stab::sigma_to_json(*w);
        text = w ? "non-diagonal family found over " + std::to_string(w->entries.size()) +
                       " second-factor vertices\n"
                 : "no non-diagonal family\n";
    } else {
        throw stab::parse_error("witness: pass exactly one of --graph or --pair");
    }
    return Outcome{result, text, "", 0};
}

Outcome run_verify(const std::string& mode, const std::string& gamma_arg,
                   const std::string& sigma_arg, int m, const std::string& fmt_in,
                   const stab::RunConfig& cfg) {
    stab::CheckResult check{};
    if (gamma_arg.empty()) throw stab::parse_error("verify: --gamma is required");
    stab::Graph gamma = stab::resolve_graph_arg(gamma_arg, fmt_in);
    if (mode == "pair-transfer" || mode == "pair-exclusion") {
        if (sigma_arg.empty()) throw stab::parse_error("verify " + mode + ": --sigma is required");
        stab::Graph sigma = stab::resolve_graph_arg(sigma_arg, fmt_in);
        check = mode == "pair-transfer"
                    ? stab::verify_pair_transfer_biconditional(gamma, sigma, cfg)
                    : stab::verify_pair_transfer_exclusion(gamma, sigma, cfg);
    } else if (mode == "complete-partner" || mode == "cycle-partner") {
        if (m <= 0) throw stab::parse_error("verify " + mode + ": --m is required");
        check = mode == "complete-partner" ? stab::verify_complete_partner(gamma, m, cfg)
                                           : stab::verify_cycle_partner(gamma, m, cfg);
    } else {
        throw stab::parse_error("verify: unknown mode '" + mode +
                                "' (pair-transfer, pair-exclusion, complete-partner, "
                                "cycle-partner)");
    }
    Json result;
    result["mode"] = mode;
    result["check"] = stab::check_to_json(check);
    std::string text = stab::check_status_name(check.status) + ": " + check.details + "\n";
    int code = check.status == stab::CheckStatus::kFail ? 3 : 0;
    return Outcome{result, text, "", code};
}

Outcome run_scan(const std::string& mode, const std::string& corpus_path, int max_order, int m_lo,
                 int m_hi, int order_cap, const stab::RunConfig& cfg) {
    if (mode == "complete-partner") {
        std::vector<std::string> corpus;
        if (!corpus_path.empty()) {
            corpus = stab::read_lines(corpus_path);
        } else {
            for (const auto& g : stab::internal_arc_transitive_corpus(max_order, cfg))
                corpus.push_back(stab::emit_graph6(g));
        }
        stab::ScanReport report = stab::complete_partner_scan(corpus, m_lo, m_hi, cfg);
        Json result = stab::scan_report_to_json(report);
        int code = report.counterexample_indices.empty() ? 0 : 3;
        return Outcome{result, stab::scan_report_to_text(report), stab::scan_report_to_csv(report),
                       code};
    }
    if (mode == "laws") {
        stab::LawSweepReport report = stab::law_sweep(order_cap, cfg);
        Json result = stab::law_report_to_json(report);
        int code = report.violations.empty() ? 0 : 3;
        return Outcome{result, stab::law_report_to_text(report), "", code};
    }
    throw stab::parse_error("scan: unknown mode '" + mode + "' (complete-partner, laws)");
}

void emit(const Outcome& outcome, const std::string& command, const stab::RunConfig& cfg,
          double wall_ms) {
    if (cfg.format == "json") {
        Json envelope;
        envelope["command"] = command;
        envelope["config"] = stab::config_to_json(cfg);
        envelope["result"] = outcome.result;
        envelope["timing"] = Json{{"wall_ms", wall_ms}};
        std::cout << envelope.dump(2) << "\n";
    } else if (cfg.format == "text") {
        std::cout << outcome.text;
    } else {  // csv; cfg.validate() already rejected anything else
        std::cout << (outcome.csv.empty() ? stab::json_to_csv_flat(outcome.result) : outcome.csv);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability of graphs and graph pairs under the direct product"};
    app.require_subcommand(1);
    app.fallthrough();

    stab::RunConfig cfg;
    std::string fmt_in = "auto";
    app.add_option("--budget", cfg.node_budget, "search-tree node budget per group computation")
        ->envname("STABTOOL_BUDGET");
    app.add_option("--vertex-cap", cfg.vertex_cap, "largest product graph to build")
        ->envname("STABTOOL_VERTEX_CAP");
    app.add_option("--coprime-bound", cfg.coprime_bound, "largest common factor candidate tried")
        ->envname("STABTOOL_COPRIME_BOUND");
    app.add_option("--cofactor-cap", cfg.cofactor_cap, "largest cofactor enumerated per candidate")
        ->envname("STABTOOL_COFACTOR_CAP");
    app.add_option("--format", cfg.format, "output format: json | csv | text")
        ->envname("STABTOOL_FORMAT");
    app.add_option("--jobs", cfg.jobs, "worker threads for scans")->envname("STABTOOL_JOBS");
    app.add_option("--seed", cfg.seed, "seed for randomised corpora")->envname("STABTOOL_SEED");
    app.add_option("--format-in", fmt_in, "input graph format: auto | g6 | el")
        ->envname("STABTOOL_FORMAT_IN");

    GraphInputs stability_in;
    auto* sc_stability =
        app.add_subcommand("stability", "classify a graph or a pair of graphs");
    add_graph_inputs(sc_stability, stability_in);

    std::string aut_graph;
    auto* sc_aut = app.add_subcommand("aut", "automorphism group and structural summary");
    sc_aut->add_option("graph", aut_graph, "file, built-in name or graph6 literal")->required();

    std::vector<std::string> product_factors;
    std::string product_out;
    auto* sc_product = app.add_subcommand("product", "build the direct product of two graphs");
    sc_product->add_option("factors", product_factors, "two factor graphs")
        ->expected(2)
        ->required();
    sc_product->add_option("-o,--output", product_out,
                           "write graph6 here (plus a .json sidecar) instead of stdout");

    GraphInputs witness_in;
    auto* sc_witness = app.add_subcommand(
        "witness", "search for an instability witness of a graph or a pair");
    add_graph_inputs(sc_witness, witness_in);

    std::string verify_mode, verify_gamma, verify_sigma;
    int verify_m = 0;
    auto* sc_verify = app.add_subcommand("verify", "check one verified statement on an instance");
    sc_verify
        ->add_option("mode", verify_mode,
                     "pair-transfer | pair-exclusion | complete-partner | cycle-partner")
        ->required();
    sc_verify->add_option("--gamma", verify_gamma, "first factor");
    sc_verify->add_option("--sigma", verify_sigma, "second factor (pair-* modes)");
    sc_verify->add_option("--m", verify_m, "partner order (complete-partner, cycle-partner)");

    std::string scan_mode, scan_corpus;
    int scan_max_order = 20, scan_m_lo = 3, scan_m_hi = 8, scan_order_cap = 5;
    auto* sc_scan = app.add_subcommand("scan", "sweep a statement over a corpus");
    sc_scan->add_option("mode", scan_mode, "complete-partner | laws")->required();
    sc_scan->add_option("--corpus", scan_corpus, "graph6 file, one graph per line");
    sc_scan->add_option("--max-order", scan_max_order,
                        "internal corpus order cap (no --corpus given)");
    sc_scan->add_option("--m-lo", scan_m_lo, "smallest complete-partner order");
    sc_scan->add_option("--m-hi", scan_m_hi, "largest complete-partner order");
    sc_scan->add_option("--order-cap", scan_order_cap, "laws: exhaustive order cap");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        if (fmt_in != "auto" && fmt_in != "g6" && fmt_in != "el")
            throw stab::parse_error("--format-in must be auto, g6 or el");

        auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        std::string command;
        if (app.got_subcommand(sc_stability)) {
            command = "stability";
            outcome = run_stability(stability_in, fmt_in, cfg);
        } else if (app.got_subcommand(sc_aut)) {
            command = "aut";
            outcome = run_aut(aut_graph, fmt_in, cfg);
        } else if (app.got_subcommand(sc_product)) {
            command = "product";
            outcome = run_product(product_factors, product_out, fmt_in, cfg);
        } else if (app.got_subcommand(sc_witness)) {
            command = "witness";
            outcome = run_witness(witness_in, fmt_in, cfg);
        } else if (app.got_subcommand(sc_verify)) {
            command = "verify";
            outcome = run_verify(verify_mode, verify_gamma, verify_sigma, verify_m, fmt_in, cfg);
        } else if (app.got_subcommand(sc_scan)) {
            command = "scan";
            outcome = run_scan(scan_mode, scan_corpus, scan_max_order, scan_m_lo, scan_m_hi,
                               scan_order_cap, cfg);
        }
        double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        emit(outcome, command, cfg, wall_ms);
        return outcome.exit_code;
    } catch (const stab::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const stab::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
