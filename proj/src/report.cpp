#include "monopole/report.hpp"

#include <sstream>

namespace monopole {

Json json_int(const Int& v) {
    static const Int kSafeMax = (Int(1) << 53);
    if (v > -kSafeMax && v < kSafeMax) return v.convert_to<long long>();
    return v.str();
}

Json divisor_json(const Divisor& d) {
    Json a = Json::array();
    for (const Int& c : d.coeff) a.push_back(json_int(c));
    return a;
}

Json script_json(const FiringScript& f) {
    Json a = Json::array();
    for (const Int& c : f.values) a.push_back(json_int(c));
    return a;
}

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Json laplacian_json(const Graph& g) {
    Json rows = Json::array();
    for (const auto& row : build_laplacian(g)) rows.push_back(row);
    return Json{{"n", g.vertex_count()}, {"laplacian", rows}};
}

Json connectivity_json(const Graph& g, const ConnectivityReport& r) {
    Json comps = Json::object();
    for (const auto& [v, parts] : r.components_after_removal) {
        comps[std::to_string(v)] = parts;
    }
    return Json{{"n", g.vertex_count()},
                {"edge_connectivity", r.edge_connectivity},
                {"vertex_connectivity", r.vertex_connectivity},
                {"min_degree", r.min_degree},
                {"algebraic_connectivity", r.algebraic_connectivity},
                {"cut_vertices", r.cut_vertices},
                {"components_after_removal", comps}};
}

Json jacobian_json(const JacobianStructure& j) {
    Json factors = Json::array();
    for (const Int& f : j.invariant_factors) factors.push_back(json_int(f));
    return Json{{"factors", factors}, {"order", json_int(j.order)},
                {"base_vertex", j.base_vertex}};
}

Json rank_json(const Graph& g, const RankCertificate& c) {
    Json out{{"graph", graph_json(g)},
             {"divisor", divisor_json(c.divisor)},
             {"rank", c.rank}};
    out["obstruction"] = c.obstruction ? divisor_json(*c.obstruction) : Json(nullptr);
    return out;
}

Json reduced_json(const ReducedForm& r) {
    return Json{{"base", r.base},
                {"reduced", divisor_json(r.reduced)},
                {"script", script_json(r.script)},
                {"burn_order", r.burn_order}};
}

namespace {

Json witness_json(const MemberWitness& w) {
    Json out = Json::object();
    if (w.script) out["script"] = script_json(*w.script);
    if (w.ranks) out["ranks"] = Json::array({w.ranks->first, w.ranks->second});
    if (w.obstruction) out["obstruction"] = divisor_json(*w.obstruction);
    if (w.combo) out["combo"] = *w.combo;
    return out;
}

}  // namespace

Json window_json(const SemigroupWindow& w, bool include_witnesses) {
    Json out{{"members", w.member_list()}, {"gaps", w.gap_list()}};
    if (include_witnesses) {
        Json ws = Json::object();
        for (const auto& [alpha, witness] : w.witnesses) {
            ws[std::to_string(alpha)] = witness_json(witness);
        }
        out["witnesses"] = std::move(ws);
    }
    if (w.gaps_finite) out["gaps_finite"] = *w.gaps_finite;
    return out;
}

Json containment_json(const Graph& g, const ContainmentReport& r, bool include_witnesses) {
    return Json{{"graph", graph_json(g)},
                {"vertex", r.p},
                {"B", r.bound},
                {"hf", window_json(r.hf, include_witnesses)},
                {"hr", window_json(r.hr, include_witnesses)},
                {"hred", window_json(r.hred, include_witnesses)},
                {"checks",
                 Json{{"containment_hred_hf", r.hred_subset_hf},
                      {"containment_hred_hr", r.hred_subset_hr},
                      {"hr_subset_hf", r.hr_subset_hf},
                      {"hr_window_closed", r.hr_closed_in_window},
                      {"hf_minus_hr", r.hf_minus_hr},
                      {"min_hf", r.min_hf.value},
                      {"deg_P", r.deg_p},
                      {"lambda", r.lambda},
                      {"genus", r.genus}}}};
}

Json sweep_unit_json(const SweepUnit& u) {
    Json out{{"unit", u.index},
             {"family", u.graph_name},
             {"graph", graph_json(u.graph)},
             {"vertex", u.p},
             {"B", u.bound}};
    if (u.cap_exceeded) {
        out["status"] = "cap_exceeded";
        out["error"] = u.error;
        return out;
    }
    out["status"] = u.violation ? "VIOLATION" : "ok";
    // Findings carry the full windows and witnesses so they can be verified
    // independently; clean units stay one short line.
    bool finding = u.violation || !u.report->hr_closed_in_window;
    out["report"] = containment_json(u.graph, *u.report, finding);
    return out;
}

Json sweep_summary_json(const SweepResult& r) {
    return Json{{"summary",
                 Json{{"units", static_cast<int>(r.units.size())},
                      {"ok", r.ok},
                      {"cap_exceeded", r.cap_exceeded},
                      {"violations", r.violations},
                      {"hr_closure_findings", r.closure_findings}}}};
}

std::string human_window(const std::string& label, const SemigroupWindow& w) {
    std::ostringstream out;
    out << label << " on [0, " << w.bound << "]:";
    for (int a : w.member_list()) out << " " << a;
    out << "\n  gaps:";
    auto gaps = w.gap_list();
    if (gaps.empty()) {
        out << " none";
    } else {
        for (int a : gaps) out << " " << a;
    }
    out << "\n";
    return out.str();
}

std::string human_containment(const Graph& g, const ContainmentReport& r) {
    std::ostringstream out;
    out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << " genus=" << r.genus
        << "  P=" << r.p << " deg(P)=" << r.deg_p << " lambda=" << r.lambda << "\n";
    out << human_window("H_f(P)", r.hf);
    out << human_window("H_r(P)", r.hr);
    out << human_window("H_r^red(P)", r.hred);
    out << "hred subset of hr: " << (r.hred_subset_hr ? "yes" : "NO") << "\n";
    out << "hred subset of hf: " << (r.hred_subset_hf ? "yes" : "NO") << "\n";
    out << "hr subset of hf:   " << (r.hr_subset_hf ? "yes" : "NO (finding)") << "\n";
    out << "hr window closed:  " << (r.hr_closed_in_window ? "yes" : "NO (finding)") << "\n";
    out << "min nonzero H_f:   " << r.min_hf.value << (r.min_hf.p_is_cut ? "  (P is a cut vertex)" : "")
        << "\n";
    return out.str();
}

}  // namespace monopole
