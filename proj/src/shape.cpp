#include "mcfc/shape.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "mcfc/errors.hpp"

namespace mcfc {

PartitionShape PartitionShape::of(std::vector<int> sizes) {
    std::erase(sizes, 0);
    if (sizes.empty()) throw structural_error("shape must have at least one part");
    for (int p : sizes) {
        if (p < 0) throw structural_error("part sizes must be positive");
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return PartitionShape{std::move(sizes)};
}

int PartitionShape::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

long long PartitionShape::edge_count() const {
    long long total = n();
    long long sq = 0;
    for (int p : parts) sq += static_cast<long long>(p) * p;
    return (total * total - sq) / 2;
}

std::string PartitionShape::to_string() const {
    std::ostringstream out;
    out << n() << ':';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

PartitionShape PartitionShape::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw structural_error("shape format is \"n:p1,p2,...\"");
    int n = 0;
    try {
        n = std::stoi(text.substr(0, colon));
    } catch (const std::exception&) {
        throw structural_error("shape: bad vertex count in \"" + text + "\"");
    }
    std::vector<int> sizes;
    std::istringstream rest(text.substr(colon + 1));
    std::string piece;
    while (std::getline(rest, piece, ',')) {
        try {
            sizes.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw structural_error("shape: bad part size \"" + piece + "\"");
        }
    }
    auto shape = of(std::move(sizes));
    if (shape.n() != n) {
        throw structural_error("shape: parts sum to " + std::to_string(shape.n()) +
                               ", header says " + std::to_string(n));
    }
    return shape;
}

std::vector<PartitionShape> partitions_of(int n) {
    if (n < 1) throw structural_error("partitions_of needs n >= 1");
    std::vector<PartitionShape> out;
    std::vector<int> cur;
    // ascending lexicographic over non-increasing shapes: (1,...,1) first,
    // (n) last
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(PartitionShape{cur});
            return;
        }
        for (int p = 1; p <= std::min(rest, maxpart); ++p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace mcfc
