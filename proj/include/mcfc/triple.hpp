#ifndef MCFC_TRIPLE_HPP
#define MCFC_TRIPLE_HPP

#include "mcfc/colour_spec.hpp"
#include "mcfc/pattern.hpp"
#include "mcfc/weights.hpp"

namespace mcfc {

// A candidate solution (r, phi, alpha) with its problem level t.
struct FeasibleTriple {
    PatternFunction phi;
    WeightVector alpha;
    int level = 0;  // t in {0,1,2}

    int r() const { return phi.parts(); }

    // Structural checks plus clique-freeness of every colour class and
    // the min-list-size requirement of `level`.
    void validate(const ColourSpec& spec) const {
        spec.validate();
        if (phi.parts() != alpha.size()) {
            throw structural_error("pattern has " + std::to_string(phi.parts()) +
                                   " parts but weight vector has " +
                                   std::to_string(alpha.size()));
        }
        if (level < 0 || level > 2) throw structural_error("level must be in {0,1,2}");
        auto t = feasibility_level(phi, spec);
        if (!t) throw structural_error("pattern has a forbidden monochromatic clique");
        if (*t < level) {
            throw structural_error("pattern only reaches level " + std::to_string(*t));
        }
    }
};

}  // namespace mcfc

#endif
