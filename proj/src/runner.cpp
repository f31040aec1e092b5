#include "mcfc/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace mcfc {

namespace {

Json count_outcome_json(const ColourSpec& spec, const Json& input, const CountOutcome& outcome,
                        bool complete) {
    BigCount count{outcome.value};
    return Json{{"k", spec.to_string()},
                {"input", input},
                {"value", json_count(count)},
                {"log2", real12(count.log2())},
                {"zero", count.is_zero()},
                {"nodes", outcome.nodes},
                {"complete", complete}};
}

}  // namespace

CommandOutcome run_count_shape(const std::string& shape_text, const ColourSpec& spec,
                               std::uint64_t budget, int parallel_width) {
    const auto shape = PartitionShape::parse(shape_text);
    const Json input{{"shape", shape.to_string()}};
    try {
        auto outcome = count_shape(shape, spec, budget, parallel_width);
        return {count_outcome_json(spec, input, outcome, true), 0};
    } catch (const budget_exhausted& e) {
        return {count_outcome_json(spec, input, {e.partial, e.nodes}, false), 2};
    }
}

CommandOutcome run_count_graph(const SimpleGraph& graph, const ColourSpec& spec,
                               std::uint64_t budget, int parallel_width) {
    const Json input{{"graph", graph_json(graph)}};
    try {
        CountJob job{graph, spec, budget, parallel_width};
        auto outcome = count_colourings(job);
        return {count_outcome_json(spec, input, outcome, true), 0};
    } catch (const budget_exhausted& e) {
        return {count_outcome_json(spec, input, {e.partial, e.nodes}, false), 2};
    }
}

CommandOutcome run_search_n(int n, const ColourSpec& spec, std::uint64_t budget,
                            int parallel_width) {
    auto report = search_extremal(n, spec, budget, parallel_width);
    return {extremal_report_json(report), report.complete ? 0 : 2};
}

CommandOutcome run_symmetrise(const SimpleGraph& graph, const ColourSpec& spec,
                              std::uint64_t budget, int parallel_width) {
    auto trace = symmetrise(graph, spec, budget, parallel_width);
    Json j = symmetrisation_trace_json(trace, spec);
    j["input_graph"] = graph_json(graph);
    return {j, trace.complete ? 0 : 2};
}

CommandOutcome run_patterns(const ColourSpec& spec, int r, int t, std::uint64_t budget) {
    auto stream = enumerate_patterns(spec, r, t, budget);
    return {pattern_stream_json(stream, spec, r, t), stream.truncated ? 2 : 0};
}

CommandOutcome run_solve_q(const ColourSpec& spec, int t, int rmax, std::uint64_t budget) {
    auto report = solve_Q(spec, t, rmax, budget);
    return {qsolve_report_json(report),
            report.status == QSolveReport::Status::budget_truncated ? 2 : 0};
}

CommandOutcome run_ramsey_classic(const ColourSpec& spec, bool verify, std::uint64_t budget) {
    try {
        auto limit = verify ? verify_ramsey_limit(spec, budget) : ramsey_limit(spec);
        Json j = ramsey_limit_json(limit);
        j["k"] = spec.to_string();
        j["mode"] = "classic";
        j["decided"] = true;
        return {j, 0};
    } catch (const budget_exhausted& e) {
        Json j = ramsey_limit_json(ramsey_limit(spec));
        j["k"] = spec.to_string();
        j["mode"] = "classic";
        j["decided"] = false;
        j["nodes"] = e.nodes;
        return {j, 2};
    }
}

CommandOutcome run_ramsey_list(const ColourSpec& spec, int rmax, std::uint64_t budget) {
    Json checks = Json::array();
    std::uint64_t used = 0;
    Json j{{"k", spec.to_string()}, {"mode", "list"}};
    for (int r = 1; r <= rmax; ++r) {
        ListRamseyResult result;
        try {
            result = list_ramsey_search(spec, r, budget - used);
        } catch (const budget_exhausted& e) {
            used += e.nodes;
            j["checks"] = checks;
            j["decided"] = false;
            j["undecided_at_r"] = r;
            j["r2_min"] = r;  // every smaller r produced a witness
            j["nodes"] = used;
            return {j, 2};
        }
        used += result.nodes;
        Json check{{"r", r}, {"result", result.forced ? "forced" : "not-forced"}};
        if (result.witness && result.witness->parts() >= 2) {
            check["witness"] = format_pattern_file(spec, *result.witness);
        }
        checks.push_back(check);
        if (result.forced) {
            j["checks"] = checks;
            j["decided"] = true;
            j["r2"] = r;
            j["nodes"] = used;
            return {j, 0};
        }
    }
    j["checks"] = checks;
    j["decided"] = false;
    j["r2_min"] = rmax + 1;
    j["nodes"] = used;
    return {j, 0};
}

CommandOutcome run_bound(const ColourSpec& spec) {
    return {Json{{"k", spec.to_string()}, {"lp_bound", real12(lp_profile_bound(spec))}}, 0};
}

CommandOutcome run_stability(const PartitionShape& shape, const QSolveReport& report,
                             double eta_window) {
    Json j{{"k", report.spec.to_string()},
           {"shape", shape.to_string()},
           {"t", report.t},
           {"rmax", report.rmax},
           {"eta_window", real12(eta_window)}};
    auto result = stability_distance(shape, report, eta_window);
    if (!result) {
        j["match"] = false;
        return {j, 0};
    }
    j["match"] = true;
    j["distance"] = real12(result->distance);
    j["matched"] = qbest_json(result->matched, report.spec);
    return {j, 0};
}

CommandOutcome run_construct(const ColourSpec& spec, const PatternFunction& phi,
                             const WeightVector& alpha, int n) {
    auto built = build_construction_graph(phi, alpha, n);
    const BigInt bound = product_lower_bound(phi, built.part_sizes);
    Json alpha_json = Json::array();
    for (double v : alpha.entries) alpha_json.push_back(real12(v));
    return {Json{{"k", spec.to_string()},
                 {"n", n},
                 {"alpha", alpha_json},
                 {"part_sizes", built.part_sizes},
                 {"shape", built.shape.to_string()},
                 {"has_empty_parts", built.has_empty_parts},
                 {"graph", graph_json(built.graph)},
                 {"product_lower_bound", bound.str()},
                 {"product_log2", real12(big_log2(bound))},
                 {"rounding_constant", real12(rounding_constant(phi, spec.colours()))}},
            0};
}

namespace {

SimpleGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open graph file " + path);
    return SimpleGraph::parse_edge_list(in);
}

PatternFile load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open pattern file " + path);
    return parse_pattern_file(in);
}

struct CommonFlags {
    std::string k;
    std::uint64_t budget = kDefaultBudget;
    int parallel = 1;
    int seed = 0;  // reserved
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_k = true) {
    auto* opt = cmd->add_option("--k", flags.k, "forbidden clique orders, e.g. 3,3");
    if (needs_k) opt->required();
    cmd->add_option("--budget", flags.budget, "node-expansion budget");
    cmd->add_option("--parallel", flags.parallel, "parallel branch-prefix width");
    cmd->add_option("--seed", flags.seed, "reserved");
    cmd->add_option("--out", flags.out, "directory for result.json + manifest.json");
    cmd->add_option("--format", flags.format, "json|table (stdout only)");
}

void emit(const CommandOutcome& outcome, const CommonFlags& flags, const std::string& command,
          const Json& parameters, std::chrono::steady_clock::time_point started) {
    const std::string result_bytes = outcome.result.dump(2) + "\n";
    if (flags.out.empty()) {
        std::cout << render_report(outcome.result, flags.format);
        return;
    }
    namespace fs = std::filesystem;
    fs::create_directories(flags.out);
    {
        std::ofstream out(fs::path(flags.out) / "result.json");
        out << result_bytes;
    }
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    Json manifest{{"command", command},
                  {"parameters", parameters},
                  {"tool_version", kToolVersion},
                  {"ramsey_table_version", ramsey_table_version()},
                  {"wall_ms", wall_ms},
                  {"budget_consumed", outcome.result.value("nodes", std::uint64_t{0})},
                  {"result_digest", digest_hex(result_bytes)}};
    std::ofstream out(fs::path(flags.out) / "manifest.json");
    out << manifest.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact counting and optimisation toolkit for monochromatic-clique-free "
                 "edge colourings"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "exact F(G;k) of a graph or shape");
    CommonFlags count_flags;
    std::string count_shape_text, count_graph_path;
    add_common(count_cmd, count_flags);
    count_cmd->add_option("--shape", count_shape_text, "complete multipartite shape n:p1,p2,...");
    count_cmd->add_option("--graph", count_graph_path, "edge-list file");

    // search-n
    auto* search_cmd = app.add_subcommand("search-n", "extremal search over shapes of order n");
    CommonFlags search_flags;
    int search_n = 0;
    add_common(search_cmd, search_flags);
    search_cmd->add_option("--n", search_n, "number of vertices")->required();

    // symmetrise
    auto* symm_cmd = app.add_subcommand("symmetrise", "clone-based reduction to a shape");
    CommonFlags symm_flags;
    std::string symm_graph_path;
    add_common(symm_cmd, symm_flags);
    symm_cmd->add_option("--graph", symm_graph_path, "edge-list file")->required();

    // patterns
    auto* patterns_cmd = app.add_subcommand("patterns", "enumerate pattern classes");
    CommonFlags patterns_flags;
    int patterns_r = 0, patterns_t = 0;
    add_common(patterns_cmd, patterns_flags);
    patterns_cmd->add_option("--r", patterns_r, "number of parts")->required();
    patterns_cmd->add_option("--t", patterns_t, "minimum list size (0, 1 or 2)");

    // solve-q
    auto* solve_cmd = app.add_subcommand("solve-q", "maximise q over patterns and weights");
    CommonFlags solve_flags;
    int solve_t = 2, solve_rmax = 0;
    add_common(solve_cmd, solve_flags);
    solve_cmd->add_option("--t", solve_t, "problem level (0, 1 or 2)");
    solve_cmd->add_option("--rmax", solve_rmax, "part-count cap")->required();

    // ramsey
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey limits, classic or list");
    CommonFlags ramsey_flags;
    std::string ramsey_mode = "classic";
    bool ramsey_verify = false;
    int ramsey_rmax = 8;
    add_common(ramsey_cmd, ramsey_flags);
    ramsey_cmd->add_option("--mode", ramsey_mode, "classic|list");
    ramsey_cmd->add_flag("--verify", ramsey_verify, "re-derive the table value exhaustively");
    ramsey_cmd->add_option("--rmax", ramsey_rmax, "largest r to test in list mode");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "LP profile upper bound, uniform k");
    CommonFlags bound_flags;
    add_common(bound_cmd, bound_flags);

    // stability
    auto* stab_cmd = app.add_subcommand("stability", "l1-distance of a shape to the optimum");
    CommonFlags stab_flags;
    std::string stab_shape_text, stab_report_path;
    int stab_t = 1, stab_rmax = 0;
    double stab_eta = 1e-9;
    add_common(stab_cmd, stab_flags, false);
    stab_cmd->add_option("--shape", stab_shape_text, "shape n:p1,p2,...")->required();
    stab_cmd->add_option("--report", stab_report_path, "saved solve-q result.json");
    stab_cmd->add_option("--t", stab_t, "problem level when solving inline");
    stab_cmd->add_option("--rmax", stab_rmax, "part-count cap when solving inline");
    stab_cmd->add_option("--eta", stab_eta, "near-optimality window");

    // construct
    auto* constr_cmd = app.add_subcommand("construct", "build G_{phi,alpha}(n) + product bound");
    CommonFlags constr_flags;
    std::string constr_pattern_path, constr_alpha_text;
    bool constr_uniform = false;
    int constr_n = 0;
    add_common(constr_cmd, constr_flags, false);
    constr_cmd->add_option("--pattern", constr_pattern_path, "pattern file")->required();
    constr_cmd->add_option("--alpha", constr_alpha_text, "weights, e.g. \"0.5 0.5\"");
    constr_cmd->add_flag("--uniform", constr_uniform, "use uniform weights");
    constr_cmd->add_option("--n", constr_n, "number of vertices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        CommandOutcome outcome;
        std::string command;
        Json parameters = Json::object();
        const CommonFlags* flags = nullptr;

        if (*count_cmd) {
            command = "count";
            flags = &count_flags;
            const auto spec = ColourSpec::parse(count_flags.k);
            if (count_shape_text.empty() == count_graph_path.empty()) {
                throw structural_error("count needs exactly one of --shape / --graph");
            }
            parameters = {{"k", count_flags.k},
                          {"budget", count_flags.budget},
                          {"parallel", count_flags.parallel}};
            if (!count_shape_text.empty()) {
                parameters["shape"] = count_shape_text;
                outcome = run_count_shape(count_shape_text, spec, count_flags.budget,
                                          count_flags.parallel);
            } else {
                parameters["graph"] = count_graph_path;
                outcome = run_count_graph(load_graph(count_graph_path), spec,
                                          count_flags.budget, count_flags.parallel);
            }
        } else if (*search_cmd) {
            command = "search-n";
            flags = &search_flags;
            const auto spec = ColourSpec::parse(search_flags.k);
            parameters = {{"k", search_flags.k},
                          {"n", search_n},
                          {"budget", search_flags.budget},
                          {"parallel", search_flags.parallel}};
            outcome = run_search_n(search_n, spec, search_flags.budget, search_flags.parallel);
        } else if (*symm_cmd) {
            command = "symmetrise";
            flags = &symm_flags;
            const auto spec = ColourSpec::parse(symm_flags.k);
            parameters = {{"k", symm_flags.k},
                          {"graph", symm_graph_path},
                          {"budget", symm_flags.budget},
                          {"parallel", symm_flags.parallel}};
            outcome = run_symmetrise(load_graph(symm_graph_path), spec, symm_flags.budget,
                                     symm_flags.parallel);
        } else if (*patterns_cmd) {
            command = "patterns";
            flags = &patterns_flags;
            const auto spec = ColourSpec::parse(patterns_flags.k);
            parameters = {{"k", patterns_flags.k},
                          {"r", patterns_r},
                          {"t", patterns_t},
                          {"budget", patterns_flags.budget}};
            outcome = run_patterns(spec, patterns_r, patterns_t, patterns_flags.budget);
        } else if (*solve_cmd) {
            command = "solve-q";
            flags = &solve_flags;
            const auto spec = ColourSpec::parse(solve_flags.k);
            parameters = {{"k", solve_flags.k},
                          {"t", solve_t},
                          {"rmax", solve_rmax},
                          {"budget", solve_flags.budget}};
            outcome = run_solve_q(spec, solve_t, solve_rmax, solve_flags.budget);
        } else if (*ramsey_cmd) {
            command = "ramsey";
            flags = &ramsey_flags;
            const auto spec = ColourSpec::parse(ramsey_flags.k);
            parameters = {{"k", ramsey_flags.k},
                          {"mode", ramsey_mode},
                          {"budget", ramsey_flags.budget}};
            if (ramsey_mode == "classic") {
                outcome = run_ramsey_classic(spec, ramsey_verify, ramsey_flags.budget);
            } else if (ramsey_mode == "list") {
                parameters["rmax"] = ramsey_rmax;
                outcome = run_ramsey_list(spec, ramsey_rmax, ramsey_flags.budget);
            } else {
                throw structural_error("ramsey mode must be classic or list");
            }
        } else if (*bound_cmd) {
            command = "bound";
            flags = &bound_flags;
            const auto spec = ColourSpec::parse(bound_flags.k);
            parameters = {{"k", bound_flags.k}};
            outcome = run_bound(spec);
        } else if (*stab_cmd) {
            command = "stability";
            flags = &stab_flags;
            const auto shape = PartitionShape::parse(stab_shape_text);
            QSolveReport report;
            if (!stab_report_path.empty()) {
                std::ifstream in(stab_report_path);
                if (!in) throw structural_error("cannot open report " + stab_report_path);
                report = qsolve_report_from_json(Json::parse(in));
            } else {
                if (stab_flags.k.empty() || stab_rmax == 0) {
                    throw structural_error(
                        "stability needs --report, or --k and --rmax for an inline solve");
                }
                report = solve_Q(ColourSpec::parse(stab_flags.k), stab_t, stab_rmax,
                                 stab_flags.budget);
            }
            parameters = {{"shape", stab_shape_text},
                          {"report", stab_report_path},
                          {"k", report.spec.to_string()},
                          {"t", report.t},
                          {"rmax", report.rmax},
                          {"eta", stab_eta}};
            outcome = run_stability(shape, report, stab_eta);
        } else if (*constr_cmd) {
            command = "construct";
            flags = &constr_flags;
            auto file = load_pattern(constr_pattern_path);
            if (constr_uniform == !constr_alpha_text.empty()) {
                throw structural_error("construct needs exactly one of --alpha / --uniform");
            }
            const WeightVector alpha = constr_uniform
                                           ? WeightVector::uniform(file.pattern.parts())
                                           : WeightVector::parse(constr_alpha_text);
            parameters = {{"pattern", constr_pattern_path},
                          {"alpha", constr_alpha_text},
                          {"uniform", constr_uniform},
                          {"n", constr_n}};
            outcome = run_construct(file.spec, file.pattern, alpha, constr_n);
        }

        emit(outcome, *flags, command, parameters, started);
        return outcome.exit_code;
    } catch (const budget_exhausted& e) {
        std::cerr << "budget exhausted after " << e.nodes << " nodes\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mcfc
