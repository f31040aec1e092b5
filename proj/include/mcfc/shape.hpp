#ifndef MCFC_SHAPE_HPP
#define MCFC_SHAPE_HPP

#include <string>
#include <vector>

namespace mcfc {

// A complete multipartite shape: the multiset of part sizes, stored
// canonically in non-increasing order.
struct PartitionShape {
    std::vector<int> parts;

    static PartitionShape of(std::vector<int> sizes);

    int n() const;
    long long edge_count() const;

    // "n:p1,p2,..."
    std::string to_string() const;
    static PartitionShape parse(const std::string& text);

    bool operator==(const PartitionShape&) const = default;
    bool operator<(const PartitionShape& other) const { return parts < other.parts; }
};

// All partitions of n, each stored non-increasing, in ascending
// lexicographic order: (1,...,1), (2,1,...,1), ..., (n).
std::vector<PartitionShape> partitions_of(int n);

}  // namespace mcfc

#endif
