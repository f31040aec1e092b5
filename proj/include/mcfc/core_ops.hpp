#ifndef MCFC_CORE_OPS_HPP
#define MCFC_CORE_OPS_HPP

#include <vector>

#include "mcfc/bigcount.hpp"
#include "mcfc/graph.hpp"
#include "mcfc/pattern.hpp"
#include "mcfc/shape.hpp"
#include "mcfc/weights.hpp"

namespace mcfc {

// q(r,phi,alpha) = 2 sum_{i<j} alpha_i alpha_j log2 |phi(ij)|, in bits per
// ordered vertex pair. Empty and singleton lists contribute exactly 0.
double evaluate_q(const PatternFunction& phi, const WeightVector& alpha);

// d_ell = 2 sum over pairs with list size ell of alpha_i alpha_j, ell in [s].
// d[0] corresponds to ell = 1.
struct DensityProfile {
    std::vector<double> d;

    double weighted_log_sum() const;  // sum_ell d_ell log2(ell)
};

DensityProfile density_profile(const PatternFunction& phi, const WeightVector& alpha,
                               int colours);

// Edge count of the complete p-partite graph on n vertices with parts as
// equal as possible.
long long turan_count(int parts, int n);

// G_{phi,alpha}(n): part sizes by largest-remainder rounding of alpha*n
// (ties toward the lower index), parts i != j completely joined iff the
// pair's list is non-empty. Empty parts are dropped from the graph but the
// per-part sizes keep one entry per pattern part.
struct Construction {
    std::vector<int> part_sizes;  // aligned with the pattern's parts, zeros kept
    PartitionShape shape;         // positive sizes only, canonical order
    SimpleGraph graph;
    bool has_empty_parts = false;
};

Construction build_construction_graph(const PatternFunction& phi, const WeightVector& alpha,
                                      int n);

// prod over pairs with non-empty lists of |phi(ij)|^{sz_i * sz_j}; an exact
// lower bound for F of the constructed graph when phi is feasible.
BigInt product_lower_bound(const PatternFunction& phi, const std::vector<int>& part_sizes);

// C with F(G_{phi,alpha}(n)) >= 2^{q*C(n,2) - C*n} for all n; the rounding
// loss is at most (r-1)*log2(s) bits per vertex.
double rounding_constant(const PatternFunction& phi, int colours);

}  // namespace mcfc

#endif
