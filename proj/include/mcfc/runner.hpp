#ifndef MCFC_RUNNER_HPP
#define MCFC_RUNNER_HPP

#include "mcfc/json_io.hpp"

namespace mcfc {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 success, 1 input error, 2 budget exhausted (partial result
// still emitted).
int run_cli(int argc, const char* const* argv);

// The command behind each CLI subcommand; result JSON plus exit status.
struct CommandOutcome {
    Json result;
    int exit_code = 0;
};

CommandOutcome run_count_shape(const std::string& shape_text, const ColourSpec& spec,
                               std::uint64_t budget, int parallel_width);
CommandOutcome run_count_graph(const SimpleGraph& graph, const ColourSpec& spec,
                               std::uint64_t budget, int parallel_width);
CommandOutcome run_search_n(int n, const ColourSpec& spec, std::uint64_t budget,
                            int parallel_width);
CommandOutcome run_symmetrise(const SimpleGraph& graph, const ColourSpec& spec,
                              std::uint64_t budget, int parallel_width);
CommandOutcome run_patterns(const ColourSpec& spec, int r, int t, std::uint64_t budget);
CommandOutcome run_solve_q(const ColourSpec& spec, int t, int rmax, std::uint64_t budget);
CommandOutcome run_ramsey_classic(const ColourSpec& spec, bool verify, std::uint64_t budget);
CommandOutcome run_ramsey_list(const ColourSpec& spec, int rmax, std::uint64_t budget);
CommandOutcome run_bound(const ColourSpec& spec);
CommandOutcome run_stability(const PartitionShape& shape, const QSolveReport& report,
                             double eta_window);
CommandOutcome run_construct(const ColourSpec& spec, const PatternFunction& phi,
                             const WeightVector& alpha, int n);

}  // namespace mcfc

#endif
