#ifndef MCFC_QOPT_HPP
#define MCFC_QOPT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcfc/colour_spec.hpp"
#include "mcfc/core_ops.hpp"
#include "mcfc/counting.hpp"
#include "mcfc/patterns.hpp"
#include "mcfc/weights.hpp"

namespace mcfc {

// Numerics: objective arithmetic in double, all comparisons at 1e-9;
// stationarity systems solved to 1e-12 ties.
inline constexpr double kQTolerance = 1e-9;
inline constexpr double kQTieTolerance = 1e-12;

struct unsupported_spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AlphaOptimum {
    WeightVector alpha;
    double q_value = 0.0;
    std::vector<int> support;  // indices with positive weight
    enum class Certificate { interior_stationary, vertex, boundary_face, fallback_grid };
    Certificate certificate = Certificate::vertex;
    double kkt_residual = 0.0;
};

const char* certificate_name(AlphaOptimum::Certificate c);

// Maximise q(r,phi,.) over the simplex: solve the stationarity system
// { (Wx)_i = lambda on S, sum x = 1, x = 0 off S } for every non-empty
// support S, keep the solutions with x >= -1e-12 (clamped), and take the
// best of those, the simplex vertices, and a coarse grid cross-check.
// Singular systems fall back to a face-restricted grid at resolution 120.
AlphaOptimum optimize_alpha(const PatternFunction& phi);

struct GridOptimum {
    WeightVector alpha;
    double q_value = 0.0;
};

// Exact maximum of q over weight vectors with entries in (1/m)Z; a valid
// lower bound for the true optimum, within 2(r/m)log2(s) of it.
GridOptimum grid_oracle(const PatternFunction& phi, int resolution,
                        std::uint64_t budget = kDefaultBudget);

struct QBest {
    int r = 0;
    CanonicalPattern pattern;
    AlphaOptimum optimum;
};

struct QSolveReport {
    ColourSpec spec;
    int t = 0;
    int rmax = 0;            // effective cap actually solved
    int rmax_requested = 0;
    std::string cap_source;  // "user" or "ramsey-limit"
    enum class Status { exhaustive_up_to_rmax, budget_truncated };
    Status status = Status::exhaustive_up_to_rmax;
    std::optional<QBest> best;
    std::map<int, QBest> per_r;
    std::optional<double> lp_bound;  // uniform specs only
    std::uint64_t nodes = 0;
};

// Enumerates pattern classes for r = 1..min(rmax, R(k)-1, 8), optimises
// each, and aggregates with the deterministic tie-break (smaller r, then
// smaller canonical code). A truncated run still reports a certified lower
// bound; the report records which cap bound.
QSolveReport solve_Q(const ColourSpec& spec, int t, int rmax,
                     std::uint64_t budget = kDefaultBudget);

// Sharp LP relaxation for uniform k = (k,...,k): maximise
// sum_ell d_ell log2(ell) subject to d >= 0, sum d_ell <= 1,
// sum ell*d_ell <= s(1 - 1/(k-1)), by vertex enumeration.
double lp_profile_bound(const ColourSpec& spec);

struct StabilityResult {
    double distance = 0.0;
    QBest matched;
};

// l1-distance from the shape's part ratios to the nearest recorded
// (near-)optimal weight vector with the same part count, minimised over
// part permutations. nullopt when the report has no matching r within
// eta_window of its best.
std::optional<StabilityResult> stability_distance(const PartitionShape& shape,
                                                  const QSolveReport& report,
                                                  double eta_window);

}  // namespace mcfc

#endif
