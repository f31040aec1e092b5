#ifndef MCFC_WEIGHTS_HPP
#define MCFC_WEIGHTS_HPP

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mcfc/errors.hpp"

namespace mcfc {

// Simplex membership tolerance; sums deviating by at most the renormalise
// threshold are rescaled, anything worse is rejected.
inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kRenormaliseThreshold = 1e-9;

// A point of the simplex: r non-negative part ratios summing to 1.
struct WeightVector {
    std::vector<double> entries;

    int size() const { return static_cast<int>(entries.size()); }
    double operator[](int i) const { return entries[i]; }

    static WeightVector simplex(std::vector<double> raw) {
        if (raw.empty()) throw structural_error("weight vector must be non-empty");
        for (double v : raw) {
            if (!(v >= 0.0)) throw structural_error("weights must be non-negative");
        }
        double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
        if (std::abs(sum - 1.0) > kRenormaliseThreshold) {
            throw structural_error("weights must sum to 1 (got " + std::to_string(sum) + ")");
        }
        if (std::abs(sum - 1.0) > kSimplexTolerance) {
            for (double& v : raw) v /= sum;
        }
        return WeightVector{std::move(raw)};
    }

    static WeightVector uniform(int r) {
        return WeightVector{std::vector<double>(r, 1.0 / r)};
    }

    double l1_distance(const WeightVector& other) const {
        double d = 0.0;
        for (int i = 0; i < size(); ++i) d += std::abs(entries[i] - other.entries[i]);
        return d;
    }

    // One line of r decimal numbers.
    static WeightVector parse(const std::string& line) {
        std::istringstream in(line);
        std::vector<double> raw;
        double v;
        while (in >> v) raw.push_back(v);
        if (!in.eof()) throw structural_error("weights: malformed entry in \"" + line + "\"");
        return simplex(std::move(raw));
    }
};

}  // namespace mcfc

#endif
