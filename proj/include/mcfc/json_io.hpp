#ifndef MCFC_JSON_IO_HPP
#define MCFC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "mcfc/counting.hpp"
#include "mcfc/core_ops.hpp"
#include "mcfc/patterns.hpp"
#include "mcfc/qopt.hpp"
#include "mcfc/symmetrise.hpp"

namespace mcfc {

using Json = nlohmann::json;

// Canonical report conventions: keys sorted (nlohmann's default map),
// counts as decimal strings, reals as fixed 12-decimal strings.
std::string real12(double value);
Json json_count(const BigCount& count);

Json graph_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const Json& j);

Json extremal_report_json(const ExtremalReport& report);
Json symmetrisation_trace_json(const SymmetrisationTrace& trace, const ColourSpec& spec);
Json pattern_stream_json(const PatternStream& stream, const ColourSpec& spec, int r, int t);
Json ramsey_limit_json(const RamseyLimit& limit);
Json alpha_optimum_json(const AlphaOptimum& optimum);
Json qbest_json(const QBest& best, const ColourSpec& spec);
Json qsolve_report_json(const QSolveReport& report);

// Inverse of qsolve_report_json, for feeding a saved solve back into the
// stability command. Only the fields stability_distance needs are strict.
QSolveReport qsolve_report_from_json(const Json& j);

// format "table": human-readable flattened key = value lines (lossy).
std::string render_report(const Json& report, const std::string& format);

std::string digest_hex(const std::string& bytes);

}  // namespace mcfc

#endif
