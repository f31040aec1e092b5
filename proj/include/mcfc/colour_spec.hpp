#ifndef MCFC_COLOUR_SPEC_HPP
#define MCFC_COLOUR_SPEC_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "mcfc/errors.hpp"

namespace mcfc {

// The sequence k = (k_1,...,k_s): colour c may not contain a K_{k_c}.
// Colours are labelled, so the order of the sequence is significant.
struct ColourSpec {
    std::vector<int> k;

    int colours() const { return static_cast<int>(k.size()); }

    int min_k() const { return *std::min_element(k.begin(), k.end()); }

    bool uniform() const {
        return std::all_of(k.begin(), k.end(), [&](int v) { return v == k.front(); });
    }

    // Standing assumptions: at least two colours, every k_c >= 3
    // (k_c = 2 would just forbid the colour outright).
    void validate() const {
        if (colours() < 2) throw invalid_spec_error("colour spec needs s >= 2 colours");
        for (int kc : k) {
            if (kc < 3) throw invalid_spec_error("every forbidden clique order must be >= 3");
        }
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(k[i]);
        }
        return out;
    }

    static ColourSpec parse(const std::string& csv);

    bool operator==(const ColourSpec&) const = default;
};

}  // namespace mcfc

#endif
