#ifndef MCFC_ERRORS_HPP
#define MCFC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "mcfc/bigcount.hpp"

namespace mcfc {

// Malformed or inconsistent inputs (dimension mismatches, bad files, ...).
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Colour spec violating s >= 2 or k_c >= 3.
struct invalid_spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A search ran out of its node-expansion budget. Carries the work done so
// far so callers can emit an explicitly flagged partial result.
struct budget_exhausted : std::runtime_error {
    std::uint64_t nodes;
    BigInt partial;

    budget_exhausted(std::uint64_t nodes_expanded, BigInt partial_count,
                     const std::string& what_happened)
        : std::runtime_error(what_happened),
          nodes(nodes_expanded),
          partial(std::move(partial_count)) {}
};

}  // namespace mcfc

#endif
