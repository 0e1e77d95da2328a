#include "stab/json_io.hpp"

#include <sstream>

#include "stab/graph_io.hpp"

namespace stab {

namespace {

Json perm_vec_to_json(const std::vector<Perm>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(perm_to_json(p));
    return arr;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

Json scan_record_to_json(const ScanRecord& r) {
    Json j;
    j["index"] = r.index;
    j["graph"] = r.graph_id;
    j["partner"] = r.partner_id;
    j["status"] = r.status;
    j["note"] = r.note;
    j["kind"] = r.kind;
    j["order_gamma"] = r.order_gamma;
    j["order_sigma"] = r.order_sigma;
    j["order_product"] = r.order_product;
    j["counterexample"] = r.counterexample;
    j["wall_ms"] = r.wall_ms;
    return j;
}

void flatten_into(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten_into(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (j.is_array()) {
        out << csv_escape(prefix) << "," << csv_escape(j.dump()) << "\n";
    } else if (j.is_string()) {
        out << csv_escape(prefix) << "," << csv_escape(j.get<std::string>()) << "\n";
    } else {
        out << csv_escape(prefix) << "," << csv_escape(j.dump()) << "\n";
    }
}

}  // namespace

Json config_to_json(const RunConfig& cfg) {
    Json j;
    j["node_budget"] = cfg.node_budget;
    j["vertex_cap"] = cfg.vertex_cap;
    j["coprime_bound"] = cfg.coprime_bound;
    j["cofactor_cap"] = cfg.cofactor_cap;
    j["format"] = cfg.format;
    j["jobs"] = cfg.jobs;
    j["seed"] = cfg.seed;
    return j;
}

Json perm_to_json(const Perm& p) {
    return Json(p.image());
}

Json group_to_json(const PermGroup& g) {
    Json j;
    j["degree"] = g.degree();
    j["order"] = g.order().get_str();
    j["num_generators"] = static_cast<int>(g.generators().size());
    Json gens = Json::array();
    for (const auto& p : g.generators()) gens.push_back(p.one_line());
    j["generators"] = gens;
    Json orbits = Json::array();
    for (const auto& orb : g.orbits()) orbits.push_back(Json(orb));
    j["orbits"] = orbits;
    return j;
}

Json orders_to_json(const OrderTriple& o) {
    Json j;
    j["gamma"] = o.gamma.get_str();
    j["sigma"] = o.sigma.get_str();
    j["product"] = o.product.get_str();
    return j;
}

Json two_fold_to_json(const TwoFoldAutomorphism& t) {
    Json j;
    j["alpha"] = perm_to_json(t.alpha);
    j["beta"] = perm_to_json(t.beta);
    j["nontrivial"] = t.nontrivial();
    return j;
}

Json sigma_to_json(const SigmaAutomorphism& s) {
    Json j;
    j["entries"] = perm_vec_to_json(s.entries);
    j["pinned"] = Json(s.pinned);
    j["non_diagonal"] = s.non_diagonal();
    return j;
}

Json coprimality_to_json(const CoprimalityAnswer& a) {
    Json j;
    j["status"] = coprimality_status_name(a.status);
    j["reason"] = a.reason;
    if (a.common_factor) j["common_factor"] = emit_graph6(*a.common_factor);
    if (a.gamma_cofactor) j["gamma_cofactor"] = emit_graph6(*a.gamma_cofactor);
    if (a.sigma_cofactor) j["sigma_cofactor"] = emit_graph6(*a.sigma_cofactor);
    return j;
}

Json verdict_to_json(const StabilityVerdict& v) {
    Json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["orders"] = orders_to_json(v.orders);
    Json viols = Json::array();
    for (auto h : v.violations) viols.push_back(hypothesis_name(h));
    j["violations"] = viols;
    if (v.coprimality) j["coprimality"] = coprimality_to_json(*v.coprimality);
    if (v.witness) j["witness"] = sigma_to_json(*v.witness);
    return j;
}

Json check_to_json(const CheckResult& r) {
    Json j;
    j["status"] = check_status_name(r.status);
    j["details"] = r.details;
    return j;
}

Json scan_report_to_json(const ScanReport& r) {
    Json j;
    j["scan"] = r.scan_name;
    j["config"] = config_to_json(r.config);
    j["evaluated"] = r.evaluated;
    j["skipped"] = r.skipped;
    j["counterexamples"] = Json(r.counterexample_indices);
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(scan_record_to_json(rec));
    j["records"] = records;
    return j;
}

Json law_report_to_json(const LawSweepReport& r) {
    Json j;
    j["pair_checks"] = r.pair_checks;
    j["single_checks"] = r.single_checks;
    j["fuzz_trials"] = r.fuzz_trials;
    j["violations"] = Json(r.violations);
    return j;
}

std::string scan_report_to_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "index,graph,partner,status,note,kind,order_gamma,order_sigma,order_product,"
           "counterexample\n";
    for (const auto& rec : r.records) {
        out << rec.index << "," << csv_escape(rec.graph_id) << "," << csv_escape(rec.partner_id)
            << "," << csv_escape(rec.status) << "," << csv_escape(rec.note) << ","
            << csv_escape(rec.kind) << "," << rec.order_gamma << "," << rec.order_sigma << ","
            << rec.order_product << "," << (rec.counterexample ? "1" : "0") << "\n";
    }
    return out.str();
}

std::string verdict_to_text(const StabilityVerdict& v) {
    std::ostringstream out;
    out << "verdict: " << verdict_kind_name(v.kind) << "\n";
    out << "|Aut(gamma)|  = " << v.orders.gamma.get_str() << "\n";
    out << "|Aut(sigma)|  = " << v.orders.sigma.get_str() << "\n";
    out << "|Aut(product)| = " << v.orders.product.get_str() << "\n";
    if (!v.violations.empty()) {
        out << "violated hypotheses:";
        for (auto h : v.violations) out << " " << hypothesis_name(h);
        out << "\n";
    }
    if (v.coprimality) {
        out << "coprimality: " << coprimality_status_name(v.coprimality->status) << " ("
            << v.coprimality->reason << ")\n";
    }
    if (v.witness) {
        out << "witness: non-diagonal family over " << v.witness->entries.size()
            << " sigma-vertices\n";
    }
    return out.str();
}

std::string scan_report_to_text(const ScanReport& r) {
    std::ostringstream out;
    out << "scan: " << r.scan_name << "\n";
    out << "records: " << r.records.size() << " (evaluated " << r.evaluated << ", skipped "
        << r.skipped << ")\n";
    out << "counterexamples: " << r.counterexample_indices.size() << "\n";
    for (int idx : r.counterexample_indices) {
        const auto& rec = r.records[static_cast<std::size_t>(idx)];
        out << "  [" << rec.index << "] " << rec.graph_id << " with " << rec.partner_id << ": "
            << rec.kind << " " << rec.note << "\n";
    }
    return out.str();
}

std::string law_report_to_text(const LawSweepReport& r) {
    std::ostringstream out;
    out << "pair checks: " << r.pair_checks << "\n";
    out << "single-graph checks: " << r.single_checks << "\n";
    out << "fuzz trials: " << r.fuzz_trials << "\n";
    out << "violations: " << r.violations.size() << "\n";
    for (const auto& v : r.violations) out << "  " << v << "\n";
    return out.str();
}

std::string json_to_csv_flat(const Json& j) {
    std::ostringstream out;
    out << "key,value\n";
    flatten_into(j, "", out);
    return out.str();
}

}  // namespace stab
