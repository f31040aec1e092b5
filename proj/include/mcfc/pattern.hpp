#ifndef MCFC_PATTERN_HPP
#define MCFC_PATTERN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcfc/colour_spec.hpp"
#include "mcfc/errors.hpp"

namespace mcfc {

// A pattern function assigns a colour list (subset of [s], kept as a
// bitmask with bit c-1 for colour c) to every pair of the r parts.
class PatternFunction {
public:
    PatternFunction() = default;
    explicit PatternFunction(int r);

    int parts() const { return r_; }
    int pair_count() const { return static_cast<int>(lists_.size()); }

    static int pair_index(int i, int j, int r);

    std::uint32_t list(int i, int j) const { return lists_[pair_index(i, j, r_)]; }
    std::uint32_t list_at(int pair) const { return lists_[pair]; }
    void set_list(int i, int j, std::uint32_t colours);
    void set_list_at(int pair, std::uint32_t colours) { lists_[pair] = colours; }
    int list_size(int i, int j) const;

    // Adjacency masks (one per part) of classFor(c) = { ij : c in list(ij) },
    // colour c 1-based.
    std::vector<std::uint64_t> colour_class(int c) const;

    int min_list_size() const;
    int max_list_size() const;

    bool operator==(const PatternFunction&) const = default;

private:
    int r_ = 0;
    std::vector<std::uint32_t> lists_;
};

// Pattern file format:
//   header "r s k_1 ... k_s"
//   one record per pair: "i j c1,c2,..." (1-based, i < j), empty list "-"
// Records may arrive in any order; a missing pair means an empty list,
// a duplicate record is an error.
struct PatternFile {
    ColourSpec spec;
    PatternFunction pattern;
};

PatternFile parse_pattern_file(std::istream& in);
PatternFile parse_pattern_text(const std::string& text);
std::string format_pattern_file(const ColourSpec& spec, const PatternFunction& phi);

// infeasible -> nullopt; otherwise the largest t in {0,1,2} with every
// list size >= t.
std::optional<int> feasibility_level(const PatternFunction& phi, const ColourSpec& spec);

}  // namespace mcfc

#endif
