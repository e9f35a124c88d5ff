#include "embtop/report_json.hpp"

namespace embtop {

Json json_int(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

namespace {

Json witness_json(const MinorWitness& w) {
    Json j;
    j["pattern"] = pattern_name(w.pattern);
    j["kind"] = w.subdivision ? "subdivision" : "minor";
    if (w.subdivision) {
        j["branch_vertices"] = w.branch_vertex;
        j["paths"] = w.paths;
    } else {
        j["branch_sets"] = w.branch_sets;
    }
    return j;
}

}  // namespace

Json scan_report_json(const ObstructionReport& report, bool with_timing) {
    Json j;
    j["mode"] = scan_mode_name(report.mode);
    j["verdict"] = scan_verdict_name(report.verdict);
    if (report.verdict == ScanVerdict::Pass)
        j["message"] = "no obstruction found (necessary conditions hold)";
    Json chain = Json::array();
    for (const auto& level : report.witness_chain) chain.push_back(level.vertices);
    j["witness_chain"] = chain;
    j["terminal_pattern"] = report.terminal_pattern;
    if (report.terminal_witness)
        j["terminal_witness"] = witness_json(*report.terminal_witness);
    if (report.mode == ScanMode::Linkless2dPlus1 &&
        report.verdict == ScanVerdict::Obstruction)
        j["k6_screen"] = report.k6_screen;
    j["statistics"] = Json{{"triples_scanned", report.stats.triples_scanned},
                           {"max_depth", report.stats.max_depth},
                           {"elapsed_ms", with_timing ? report.stats.elapsed_ms : 0},
                           {"nonempty_intersections", report.stats.nonempty_intersections},
                           {"max_intersection_facets", report.stats.max_intersection_facets},
                           {"links_computed", report.stats.links_computed},
                           {"graph_tests", report.stats.graph_tests},
                           {"budget_nodes", report.stats.budget_nodes}};
    return j;
}

Json analyze_report_json(const SimplicialComplex& K) {
    Json j;
    const FVector fv = f_vector(K);
    j["dimension"] = K.dim();
    j["vertices"] = static_cast<long long>(K.vertex_count());
    j["f_vector"] = fv.counts;
    j["facets"] = static_cast<long long>(K.facets().size());

    Json links = Json::array();
    for (VertexId v : K.vertices()) {
        const SimplicialComplex L = link(K, v);
        Json lj;
        lj["vertex"] = v;
        lj["f_vector"] = f_vector(L).counts;
        links.push_back(lj);
    }
    j["links"] = links;

    Json identity = Json::array();
    for (int k = 1; k <= K.dim(); ++k) {
        const LinkCountIdentity id = verify_link_count_identity(K, k);
        identity.push_back(
            Json{{"k", k}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"equal", id.equal}});
    }
    j["link_count_identity"] = identity;

    std::map<long long, long long> hist;
    for (VertexId v : K.vertices())
        hist[degree(K, Simplex::of({v}))] += 1;
    Json dh = Json::array();
    for (auto [deg, count] : hist)
        dh.push_back(Json{{"degree", deg}, {"count", count}});
    j["vertex_degree_histogram"] = dh;
    return j;
}

Json lemma_chain_json(const LemmaChainReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["f_bound"] = r.f_bound;
    j["t"] = json_int(r.t);
    j["sum_kappa"] = json_int(r.sum_kappa);
    j["sum_kappa_sq"] = json_int(r.sum_kappa_sq);
    j["sum_kappa_cu"] = json_int(r.sum_kappa_cu);
    j["sum_choose3"] = json_int(r.sum_choose3);
    j["triple_sum"] = json_int(r.triple_sum);
    j["steps"] = Json::array({
        Json{{"name", "triple_sum_le_cm3_f"},
             {"lhs", json_int(r.triple_sum)},
             {"rhs", json_int(r.cm3_times_f)},
             {"holds", r.step_a}},
        Json{{"name", "hoelder_t3_le_n2_sumcu"},
             {"lhs", json_int(r.t_cubed)},
             {"rhs", json_int(r.n_sq_sum_cu)},
             {"holds", r.step_b}},
        Json{{"name", "choose3_expansion_exact"},
             {"lhs", json_int(6 * r.sum_choose3)},
             {"rhs", json_int(r.sum_kappa_cu - 3 * r.sum_kappa_sq + 2 * r.sum_kappa)},
             {"holds", r.expansion_exact}},
        Json{{"name", "choose3_lower_bound"},
             {"lhs", json_int(r.six_n2_choose3)},
             {"rhs", json_int(r.c_rhs)},
             {"holds", r.step_c}},
    });
    j["all_hold"] = r.all_hold;
    return j;
}

Json triple_identity_json(const TripleIdentity& t) {
    return Json{{"lhs", json_int(t.lhs)}, {"rhs", json_int(t.rhs)}, {"equal", t.equal}};
}

Json linking_trace_json(const LinkingResult& result) {
    Json j;
    j["linking_number"] = result.value;
    j["apex"] = Json::array({rational_to_string(result.apex_used.x),
                             rational_to_string(result.apex_used.y),
                             rational_to_string(result.apex_used.z)});
    j["apex_attempts"] = result.attempts;
    Json crossings = Json::array();
    for (const auto& c : result.crossings) {
        crossings.push_back(Json{{"cone_edge", {c.cone_edge.first, c.cone_edge.second}},
                                 {"segment", {c.segment.first, c.segment.second}},
                                 {"sign", c.sign},
                                 {"contribution", c.contribution}});
    }
    j["crossings"] = crossings;
    j["predicates_checked"] = static_cast<long long>(result.certificate.checked.size());
    return j;
}

Json bounds_table_json(int d_max, std::optional<long long> n) {
    Json rows = Json::array();
    const auto levels = unroll_recursion(d_max);
    for (const auto& level : levels) {
        Json row;
        row["d"] = level.d;
        const mpq_class e = bound_exponent(level.d);
        row["exponent"] = e.get_str();
        row["exponent_num"] = json_int(mpz_class(e.get_num()));
        row["exponent_den"] = json_int(mpz_class(e.get_den()));
        row["c_exponent"] = level.c_exponent.get_str();
        if (n) row["ceil_n_pow_e"] = json_int(bound_ceiling(*n, level.d));
        rows.push_back(row);
    }
    Json j;
    j["rows"] = rows;
    return j;
}

}  // namespace embtop
