#ifndef MCFC_COUNTING_HPP
#define MCFC_COUNTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcfc/bigcount.hpp"
#include "mcfc/colour_spec.hpp"
#include "mcfc/errors.hpp"
#include "mcfc/graph.hpp"
#include "mcfc/shape.hpp"

namespace mcfc {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// One exact count: host graph, forbidden clique orders, a node-expansion
// budget (an expansion = one attempted colour assignment to one edge) and
// the number of independent branch prefixes to split the tree into.
struct CountJob {
    SimpleGraph graph;
    ColourSpec spec;
    std::uint64_t budget = kDefaultBudget;
    int parallel_width = 1;
};

struct CountOutcome {
    BigInt value;
    std::uint64_t nodes = 0;
};

// True iff no colour class contains its forbidden clique. `colouring` is
// indexed like graph.edges(), colours 0-based.
bool is_valid_colouring(const SimpleGraph& graph, std::span<const int> colouring,
                        const ColourSpec& spec);

// Exact F(G;k) by pruned backtracking over edge colourings. Edges are
// ordered to maximise already-coloured incidences; assigning colour c to uv
// is rejected as soon as the common c-neighbours of u and v span a
// K_{k_c - 2} in colour c. Hosts with clique number below min k_c shortcut
// to s^{e(G)}. The result is identical for every parallel_width, including
// the partial count carried by budget_exhausted.
CountOutcome count_colourings(const CountJob& job);

// Serial reference: enumerate all s^{e(G)} colourings and filter with
// is_valid_colouring. Kept for testing and benchmarking the engine.
BigInt count_reference(const SimpleGraph& graph, const ColourSpec& spec);

// F of the complete multipartite graph with the given shape.
CountOutcome count_shape(const PartitionShape& shape, const ColourSpec& spec,
                         std::uint64_t budget = kDefaultBudget, int parallel_width = 1);

// First k-valid colouring of the graph in colour-lexicographic order over
// the engine's edge ordering, or nullopt if none exists. Colours 0-based,
// indexed like graph.edges(). nodes_used accumulates expansions.
std::optional<std::vector<int>> find_valid_colouring(const SimpleGraph& graph,
                                                     const ColourSpec& spec,
                                                     std::uint64_t budget,
                                                     std::uint64_t& nodes_used);

struct PrunedShape {
    PartitionShape shape;
    std::string reason;
};

// Exhaustive maximisation of F over complete multipartite shapes of order n.
struct ExtremalReport {
    int n = 0;
    ColourSpec spec;
    BigCount best_value;
    std::vector<PartitionShape> argmax_shapes;           // all ties, descending lex
    std::map<PartitionShape, BigCount> per_shape;        // exact counts only
    std::vector<PrunedShape> pruned_shapes;
    bool complete = true;
    std::vector<PartitionShape> unfinished;              // non-empty iff !complete
    std::uint64_t nodes = 0;
};

// Walks every partition of n in descending lexicographic order; a shape
// whose trivial bound s^{edges} cannot beat the best exact count so far is
// recorded as pruned instead of counted.
ExtremalReport search_extremal(int n, const ColourSpec& spec,
                               std::uint64_t budget = kDefaultBudget, int parallel_width = 1);

}  // namespace mcfc

#endif
