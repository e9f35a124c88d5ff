// embtop - obstruction scans, exact linking numbers, and counting identities
// for simplicial complexes.
//
// Exit codes: 0 pass/success, 1 obstruction or violation found,
// 2 usage or input error, 3 inconclusive (search budget exhausted).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "embtop/constructions.hpp"
#include "embtop/io.hpp"
#include "embtop/report_json.hpp"

namespace et = embtop;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

void emit(const et::Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

int run_analyze(const std::string& path, bool pretty) {
    const et::SimplicialComplex K = et::read_scx_file(path);
    emit(et::analyze_report_json(K), pretty);
    return kExitPass;
}

int run_scan(const std::string& path, const std::string& mode_name, long long budget,
             bool timing, bool pretty) {
    const et::SimplicialComplex K = et::read_scx_file(path);
    const et::ScanMode mode = et::scan_mode_from_name(mode_name);
    et::SearchBudget budget_cfg;
    if (budget > 0) budget_cfg.node_limit = budget;
    const et::ObstructionReport report = et::scan(K, mode, budget_cfg);
    emit(et::scan_report_json(report, timing), pretty);
    switch (report.verdict) {
        case et::ScanVerdict::Pass: return kExitPass;
        case et::ScanVerdict::Obstruction: return kExitViolation;
        case et::ScanVerdict::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int run_construct(const std::string& kind, std::vector<std::string> params,
                  const std::string& input, const std::string& output, unsigned seed,
                  int skeleton_dim) {
    et::SimplicialComplex K;
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("construct", "kind '" + kind + "' expects " +
                                                        std::to_string(k) +
                                                        " integer parameter(s)");
    };
    auto p = [&](std::size_t i) { return std::stoi(params.at(i)); };

    if (kind == "complete") {
        need(2);
        K = et::complete_complex(p(0), p(1));
    } else if (kind == "grunbaum") {
        if (params.empty())
            throw CLI::ValidationError("construct", "grunbaum needs factor dimensions");
        std::vector<int> dims;
        for (const auto& s : params) dims.push_back(std::stoi(s));
        K = et::grunbaum_join(dims);
    } else if (kind == "cyclic") {
        need(1);
        K = et::cyclic_polytope_boundary(p(0));
    } else if (kind == "cyclic-drop-facet") {
        need(2);
        K = et::cyclic_polytope_boundary_drop_facet(p(0), static_cast<std::size_t>(p(1)));
    } else if (kind == "staircase") {
        need(2);
        K = et::staircase_complex(p(0), p(1));
    } else if (kind == "double-cone") {
        if (input.empty())
            throw CLI::ValidationError("construct", "double-cone needs --input graph.scx");
        K = et::double_cone(et::Graph::from_complex(et::read_scx_file(input)));
    } else if (kind == "apex") {
        if (input.empty())
            throw CLI::ValidationError("construct", "apex needs --input graph.scx");
        const et::Graph g = et::apex_graph(et::Graph::from_complex(et::read_scx_file(input)));
        std::vector<et::Simplex> facets;
        for (auto [u, v] : g.edges()) facets.push_back(et::Simplex::of({u, v}));
        K = et::closure(std::move(facets));
    } else if (kind == "petersen") {
        need(1);
        const auto& ids = et::petersen_family_ids();
        const int idx = p(0);
        if (idx < 0 || idx >= static_cast<int>(ids.size()))
            throw CLI::ValidationError("construct", "petersen index must be 0..6");
        const et::Graph g = et::pattern_graph(ids[idx]);
        std::vector<et::Simplex> facets;
        for (auto [u, v] : g.edges()) facets.push_back(et::Simplex::of({u, v}));
        K = et::closure(std::move(facets));
    } else if (kind == "maximal-planar") {
        need(1);
        const et::Graph g = et::maximal_planar(p(0), seed);
        std::vector<et::Simplex> facets;
        for (auto [u, v] : g.edges()) facets.push_back(et::Simplex::of({u, v}));
        K = et::closure(std::move(facets));
    } else {
        throw CLI::ValidationError("construct", "unknown kind '" + kind + "'");
    }

    if (skeleton_dim >= 0) K = et::skeleton(K, skeleton_dim);

    if (output.empty()) {
        et::write_scx(std::cout, K, "embtop construct " + kind);
    } else {
        et::write_scx_file(output, K, "embtop construct " + kind);
    }
    return kExitPass;
}

int run_linking(const std::string& path, const std::string& cycle1,
                const std::string& cycle2, const std::string& apex_spec,
                bool no_auto_perturb, bool pretty) {
    const et::GeomFile geom = et::read_geom_file(path);
    const et::Chain z1 = et::cycle_from_edge_list(geom, cycle1);
    const et::Chain z2 = et::cycle_from_edge_list(geom, cycle2);
    et::LinkingOptions opts;
    opts.auto_perturb = !no_auto_perturb;
    if (!apex_spec.empty()) {
        std::stringstream ss(apex_spec);
        std::string x, y, z;
        if (!std::getline(ss, x, ',') || !std::getline(ss, y, ',') ||
            !std::getline(ss, z, ','))
            throw CLI::ValidationError("linking", "--apex expects x,y,z");
        opts.apex = et::Point3{et::parse_rational(x), et::parse_rational(y),
                               et::parse_rational(z)};
    }
    const et::LinkingResult res = et::linking_number(geom.curves, z1, z2, opts);
    emit(et::linking_trace_json(res), pretty);
    return kExitPass;
}

int run_setsystem(const std::string& path, long long f_bound, bool pretty) {
    const et::SetSystem s = et::read_setsystem_file(path);
    try {
        const et::LemmaChainReport report = et::verify_lemma_chain(s, f_bound);
        emit(et::lemma_chain_json(report), pretty);
        return report.all_hold ? kExitPass : kExitViolation;
    } catch (const std::invalid_argument& e) {
        et::Json j;
        j["error"] = e.what();
        emit(j, pretty);
        return kExitViolation;
    }
}

int run_bounds(int d, std::optional<long long> n, bool pretty) {
    emit(et::bounds_table_json(d, n), pretty);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"embeddability obstructions, PL linking numbers, and exact "
                 "counting identities for simplicial complexes"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* analyze = app.add_subcommand("analyze", "f-vector, links, counting identity");
    std::string analyze_file;
    analyze->add_option("file", analyze_file, ".scx complex")->required();

    auto* scan = app.add_subcommand("scan", "link-complex obstruction scan");
    std::string scan_file, scan_mode;
    long long scan_budget = 0;
    bool scan_timing = false;
    scan->add_option("file", scan_file, ".scx complex")->required();
    scan->add_option("--mode", scan_mode, "embed-2d | linkless-2d+1 | embed-3")
        ->required();
    scan->add_option("--budget", scan_budget,
                     "search-node budget per graph-level test (deterministic)");
    scan->add_flag("--timing", scan_timing,
                   "emit measured elapsed_ms (off keeps reruns byte-identical)");

    auto* construct = app.add_subcommand("construct", "generators for named complexes");
    std::string c_kind, c_input, c_output;
    std::vector<std::string> c_params;
    unsigned c_seed = 1;
    construct->add_option("kind", c_kind,
                          "complete | grunbaum | cyclic | cyclic-drop-facet | staircase "
                          "| double-cone | apex | petersen | maximal-planar")
        ->required();
    construct->add_option("params", c_params, "integer parameters for the kind");
    construct->add_option("--input", c_input, ".scx graph input for double-cone/apex");
    construct->add_option("-o,--output", c_output, "output .scx (stdout if omitted)");
    construct->add_option("--seed", c_seed, "seed for maximal-planar");
    int c_skeleton = -1;
    construct->add_option("--skeleton", c_skeleton, "emit the k-skeleton instead");

    auto* linking = app.add_subcommand("linking", "exact PL linking number");
    std::string l_file, l_c1, l_c2, l_apex;
    bool l_no_perturb = false;
    linking->add_option("file", l_file, ".geom input")->required();
    linking->add_option("--cycle1", l_c1, "signed 1-based edge indices, e.g. 1,2,-3")
        ->required();
    linking->add_option("--cycle2", l_c2, "second cycle")->required();
    linking->add_option("--apex", l_apex, "fixed cone apex x,y,z (rationals)");
    linking->add_flag("--no-auto-perturb", l_no_perturb,
                      "fail on a degenerate apex instead of walking the sequence");

    auto* setsystem = app.add_subcommand("setsystem", "triple-intersection lemma chain");
    std::string s_file;
    long long s_fbound = 0;
    setsystem->add_option("file", s_file, "set-system text file")->required();
    setsystem->add_option("--f-bound", s_fbound, "triple-intersection cap f")->required();

    auto* bounds = app.add_subcommand("bounds", "exact exponent table");
    int b_d = 1;
    long long b_n = 0;
    bounds->add_option("--d", b_d, "maximum d (table covers 1..d)")->required();
    bounds->add_option("--n", b_n, "also evaluate ceil(n^e(d))");

    try {
        app.parse(argc, argv);
        if (*analyze) return run_analyze(analyze_file, pretty);
        if (*scan) return run_scan(scan_file, scan_mode, scan_budget, scan_timing, pretty);
        if (*construct)
            return run_construct(c_kind, c_params, c_input, c_output, c_seed, c_skeleton);
        if (*linking) return run_linking(l_file, l_c1, l_c2, l_apex, l_no_perturb, pretty);
        if (*setsystem) return run_setsystem(s_file, s_fbound, pretty);
        if (*bounds)
            return run_bounds(b_d, b_n > 0 ? std::optional<long long>(b_n) : std::nullopt,
                              pretty);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const et::degenerate_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
