#ifndef MCFC_SYMMETRISE_HPP
#define MCFC_SYMMETRISE_HPP

#include <cstdint>
#include <vector>

#include "mcfc/bigcount.hpp"
#include "mcfc/colour_spec.hpp"
#include "mcfc/counting.hpp"
#include "mcfc/graph.hpp"
#include "mcfc/shape.hpp"

namespace mcfc {

// Twin classes (vertices with identical neighbourhoods), each sorted,
// ordered by smallest member. A graph is complete multipartite exactly when
// every non-adjacent pair lies inside one class.
std::vector<std::vector<int>> twin_partition(const SimpleGraph& graph);

bool is_complete_multipartite(const SimpleGraph& graph);

// G_u: delete v, add a clone of u in its slot. u and v must be non-adjacent.
SimpleGraph clone_replace(const SimpleGraph& graph, int u, int v);

// Sum of frozen twin-class sizes plus the largest unfrozen class size; a
// class is frozen when it is completely joined to its complement. Strictly
// increases along a symmetrisation trace.
int frozen_potential(const SimpleGraph& graph);

struct SymmetrisationStep {
    int u = 0;
    int v = 0;
    char kept = 'u';  // which clone side replaced the graph
    BigCount f_before;
    BigCount f_u;
    BigCount f_v;
    BigCount f_after;
    int potential_before = 0;
    int potential_after = 0;
};

struct SymmetrisationTrace {
    std::vector<SymmetrisationStep> steps;
    SimpleGraph final_graph;
    PartitionShape final_shape;
    BigCount f_initial;
    BigCount f_final;
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Repeatedly clone across the non-adjacent non-twin pair with |[u]~|
// maximal (ties: smallest u, then smallest v), keeping whichever clone
// counts higher (ties keep G_u). Stops at a complete multipartite graph in
// at most n-1 steps, never decreasing F.
SymmetrisationTrace symmetrise(const SimpleGraph& graph, const ColourSpec& spec,
                               std::uint64_t budget = kDefaultBudget, int parallel_width = 1);

}  // namespace mcfc

#endif
