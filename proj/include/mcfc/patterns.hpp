#ifndef MCFC_PATTERNS_HPP
#define MCFC_PATTERNS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcfc/colour_spec.hpp"
#include "mcfc/counting.hpp"
#include "mcfc/pattern.hpp"

namespace mcfc {

// A pattern class representative. Two patterns share a code exactly when a
// part permutation combined with a k-preserving colour permutation maps one
// to the other; `pattern` is the class minimum under that group.
struct CanonicalPattern {
    PatternFunction pattern;
    std::string canonical_code;  // hex of the minimal list-byte sequence
    std::uint64_t orbit_size = 0;
};

CanonicalPattern canonical_form(const PatternFunction& phi, const ColourSpec& spec);

struct PatternStream {
    std::vector<CanonicalPattern> classes;  // sorted by canonical code
    bool truncated = false;
    std::uint64_t nodes = 0;
};

// All feasibility-level >= t pattern classes on r parts, each exactly once.
// Backtracks pair by pair with incremental colour-class clique pruning and
// canonical-representative rejection. `pair_order`, when given, permutes
// the assignment order of the pairs (the class set must not change).
PatternStream enumerate_patterns(const ColourSpec& spec, int r, int t,
                                 std::uint64_t budget = kDefaultBudget,
                                 const std::vector<int>* pair_order = nullptr);

struct RamseyLimit {
    long long value = 0;
    enum class Kind { exact_known, exact_verified, upper_bound } kind = Kind::upper_bound;
    std::string method;
};

const char* ramsey_kind_name(RamseyLimit::Kind kind);

// Known multicolour Ramsey values from the bundled table asset, falling
// back to the multinomial upper bound (sum (k_c - 1))! / prod (k_c - 1)!.
RamseyLimit ramsey_limit(const ColourSpec& spec);

// Re-derives a table entry exhaustively: K_{R-1} must admit a valid
// colouring and K_R must not. Upgrades the kind to exact_verified.
RamseyLimit verify_ramsey_limit(const ColourSpec& spec, std::uint64_t budget);

std::string ramsey_table_path();
std::string ramsey_table_version();

enum class RamseyDecision { admits, does_not_admit };

struct RamseyVerification {
    RamseyDecision decision;
    std::vector<int> witness;  // 0-based colours, indexed like K_r edges; empty if none
    std::uint64_t nodes = 0;
};

// Exhaustive (pruned) decision whether K_r has a k-valid colouring.
RamseyVerification verify_ramsey(const ColourSpec& spec, int r,
                                 std::uint64_t budget = kDefaultBudget);

struct ListRamseyResult {
    bool forced = false;
    std::optional<PatternFunction> witness;  // all lists of size 2, clique-free classes
    std::uint64_t nodes = 0;
};

// Is every size-2 list pattern on r parts forced to contain a forbidden
// monochromatic clique? Bracket R_2 by calling at consecutive r.
ListRamseyResult list_ramsey_search(const ColourSpec& spec, int r,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace mcfc

#endif
