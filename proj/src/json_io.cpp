#include "mcfc/json_io.hpp"

#include <cstdio>

namespace mcfc {

std::string real12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", value);
    return buf;
}

Json json_count(const BigCount& count) { return count.str(); }

Json graph_json(const SimpleGraph& graph) {
    Json edges = Json::array();
    for (auto [u, v] : graph.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", graph.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const Json& j) {
    SimpleGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

Json extremal_report_json(const ExtremalReport& report) {
    Json per_shape = Json::object();
    for (const auto& [shape, count] : report.per_shape) {
        per_shape[shape.to_string()] = json_count(count);
    }
    Json pruned = Json::array();
    for (const auto& p : report.pruned_shapes) {
        pruned.push_back(Json{{"shape", p.shape.to_string()}, {"reason", p.reason}});
    }
    Json argmax = Json::array();
    for (const auto& shape : report.argmax_shapes) argmax.push_back(shape.to_string());
    Json unfinished = Json::array();
    for (const auto& shape : report.unfinished) unfinished.push_back(shape.to_string());
    return Json{{"n", report.n},
                {"k", report.spec.to_string()},
                {"best_value", json_count(report.best_value)},
                {"best_log2", real12(report.best_value.log2())},
                {"argmax", argmax},
                {"per_shape", per_shape},
                {"pruned", pruned},
                {"complete", report.complete},
                {"unfinished", unfinished},
                {"nodes", report.nodes}};
}

Json symmetrisation_trace_json(const SymmetrisationTrace& trace, const ColourSpec& spec) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        steps.push_back(Json{{"u", s.u},
                             {"v", s.v},
                             {"kept", std::string(1, s.kept)},
                             {"f_before", json_count(s.f_before)},
                             {"f_u", json_count(s.f_u)},
                             {"f_v", json_count(s.f_v)},
                             {"f_after", json_count(s.f_after)},
                             {"potential_before", s.potential_before},
                             {"potential_after", s.potential_after}});
    }
    return Json{{"k", spec.to_string()},
                {"steps", steps},
                {"final_graph", graph_json(trace.final_graph)},
                {"final_shape", trace.final_shape.to_string()},
                {"f_initial", json_count(trace.f_initial)},
                {"f_final", json_count(trace.f_final)},
                {"complete", trace.complete},
                {"nodes", trace.nodes}};
}

Json pattern_stream_json(const PatternStream& stream, const ColourSpec& spec, int r, int t) {
    Json classes = Json::array();
    for (const auto& c : stream.classes) {
        classes.push_back(Json{{"pattern", format_pattern_file(spec, c.pattern)},
                               {"code", c.canonical_code},
                               {"orbit_size", c.orbit_size}});
    }
    return Json{{"k", spec.to_string()}, {"r", r},
                {"t", t},               {"classes", classes},
                {"count", stream.classes.size()},
                {"truncated", stream.truncated},
                {"nodes", stream.nodes}};
}

Json ramsey_limit_json(const RamseyLimit& limit) {
    return Json{{"value", limit.value},
                {"kind", ramsey_kind_name(limit.kind)},
                {"method", limit.method}};
}

Json alpha_optimum_json(const AlphaOptimum& optimum) {
    Json alpha = Json::array();
    for (double v : optimum.alpha.entries) alpha.push_back(real12(v));
    return Json{{"alpha", alpha},
                {"q_value", real12(optimum.q_value)},
                {"support", optimum.support},
                {"certificate", certificate_name(optimum.certificate)},
                {"kkt_residual", real12(optimum.kkt_residual)}};
}

Json qbest_json(const QBest& best, const ColourSpec& spec) {
    Json j = alpha_optimum_json(best.optimum);
    j["r"] = best.r;
    j["pattern"] = format_pattern_file(spec, best.pattern.pattern);
    j["code"] = best.pattern.canonical_code;
    j["orbit_size"] = best.pattern.orbit_size;
    return j;
}

Json qsolve_report_json(const QSolveReport& report) {
    Json per_r = Json::object();
    for (const auto& [r, best] : report.per_r) {
        per_r[std::to_string(r)] = qbest_json(best, report.spec);
    }
    Json j{{"k", report.spec.to_string()},
           {"t", report.t},
           {"rmax", report.rmax},
           {"rmax_requested", report.rmax_requested},
           {"cap_source", report.cap_source},
           {"status", report.status == QSolveReport::Status::exhaustive_up_to_rmax
                          ? "exhaustive-up-to-rmax"
                          : "budget-truncated"},
           {"per_r", per_r},
           {"nodes", report.nodes}};
    if (report.best) j["best"] = qbest_json(*report.best, report.spec);
    if (report.lp_bound) j["lp_bound"] = real12(*report.lp_bound);
    return j;
}

namespace {

QBest qbest_from_json(const Json& j) {
    QBest best;
    best.r = j.at("r").get<int>();
    auto file = parse_pattern_text(j.at("pattern").get<std::string>());
    best.pattern.pattern = std::move(file.pattern);
    best.pattern.canonical_code = j.at("code").get<std::string>();
    best.pattern.orbit_size = j.value("orbit_size", std::uint64_t{0});
    std::vector<double> alpha;
    for (const auto& v : j.at("alpha")) alpha.push_back(std::stod(v.get<std::string>()));
    best.optimum.alpha = WeightVector::simplex(std::move(alpha));
    best.optimum.q_value = std::stod(j.at("q_value").get<std::string>());
    return best;
}

}  // namespace

QSolveReport qsolve_report_from_json(const Json& j) {
    QSolveReport report;
    report.spec = ColourSpec::parse(j.at("k").get<std::string>());
    report.t = j.at("t").get<int>();
    report.rmax = j.at("rmax").get<int>();
    report.rmax_requested = j.value("rmax_requested", report.rmax);
    report.cap_source = j.value("cap_source", "user");
    report.status = j.at("status").get<std::string>() == "budget-truncated"
                        ? QSolveReport::Status::budget_truncated
                        : QSolveReport::Status::exhaustive_up_to_rmax;
    if (j.contains("best")) report.best = qbest_from_json(j.at("best"));
    for (const auto& [key, value] : j.at("per_r").items()) {
        report.per_r.emplace(std::stoi(key), qbest_from_json(value));
    }
    if (j.contains("lp_bound")) {
        report.lp_bound = std::stod(j.at("lp_bound").get<std::string>());
    }
    report.nodes = j.value("nodes", std::uint64_t{0});
    return report;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out += prefix;
        out += " = ";
        out += j.is_string() ? j.get<std::string>() : j.dump();
        out += '\n';
    }
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "table") {
        std::string out;
        flatten(report, "", out);
        return out;
    }
    throw structural_error("unknown format \"" + format + "\"");
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace mcfc
