#include "mcfc/core_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mcfc/errors.hpp"

namespace mcfc {

double evaluate_q(const PatternFunction& phi, const WeightVector& alpha) {
    const int r = phi.parts();
    if (alpha.size() != r) throw structural_error("pattern/weight dimension mismatch");
    double sum = 0.0;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const int sz = phi.list_size(i, j);
            if (sz >= 2) sum += alpha[i] * alpha[j] * std::log2(static_cast<double>(sz));
        }
    }
    return 2.0 * sum;
}

double DensityProfile::weighted_log_sum() const {
    double sum = 0.0;
    for (std::size_t ell = 2; ell <= d.size(); ++ell) {
        sum += d[ell - 1] * std::log2(static_cast<double>(ell));
    }
    return sum;
}

DensityProfile density_profile(const PatternFunction& phi, const WeightVector& alpha,
                               int colours) {
    const int r = phi.parts();
    if (alpha.size() != r) throw structural_error("pattern/weight dimension mismatch");
    DensityProfile profile;
    profile.d.assign(colours, 0.0);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const int sz = phi.list_size(i, j);
            if (sz >= 1) profile.d[sz - 1] += 2.0 * alpha[i] * alpha[j];
        }
    }
    return profile;
}

long long turan_count(int parts, int n) {
    if (parts < 1 || n < 0) throw structural_error("turan_count needs p >= 1, n >= 0");
    // parts as equal as possible: n mod p parts of size ceil, rest floor
    const long long base = n / parts;
    const long long extra = n % parts;
    long long sq = extra * (base + 1) * (base + 1) + (parts - extra) * base * base;
    return (static_cast<long long>(n) * n - sq) / 2;
}

Construction build_construction_graph(const PatternFunction& phi, const WeightVector& alpha,
                                      int n) {
    const int r = phi.parts();
    if (alpha.size() != r) throw structural_error("pattern/weight dimension mismatch");
    if (n < 1) throw structural_error("construction needs n >= 1");

    // largest-remainder apportionment, ties toward the lower part index
    std::vector<int> sizes(r);
    std::vector<double> remainder(r);
    int assigned = 0;
    for (int i = 0; i < r; ++i) {
        const double quota = alpha[i] * n;
        sizes[i] = static_cast<int>(std::floor(quota));
        remainder[i] = quota - sizes[i];
        assigned += sizes[i];
    }
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return remainder[a] > remainder[b]; });
    for (int leftover = n - assigned, at = 0; leftover > 0; --leftover, ++at) {
        sizes[order[at]] += 1;
    }

    Construction result;
    result.part_sizes = sizes;
    std::vector<int> positive;
    for (int sz : sizes) {
        if (sz > 0) positive.push_back(sz);
        else result.has_empty_parts = true;
    }
    result.shape = PartitionShape::of(positive);

    SimpleGraph g(n);
    std::vector<int> part_of(n);
    int at = 0;
    for (int i = 0; i < r; ++i)
        for (int v = 0; v < sizes[i]; ++v) part_of[at++] = i;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v] && phi.list(part_of[u], part_of[v]) != 0) {
                g.add_edge(u, v);
            }
        }
    }
    result.graph = std::move(g);
    return result;
}

BigInt product_lower_bound(const PatternFunction& phi, const std::vector<int>& part_sizes) {
    const int r = phi.parts();
    if (static_cast<int>(part_sizes.size()) != r) {
        throw structural_error("product_lower_bound needs one size per pattern part");
    }
    BigInt product = 1;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const int sz = phi.list_size(i, j);
            if (sz >= 2) {
                const std::uint64_t exp =
                    static_cast<std::uint64_t>(part_sizes[i]) * part_sizes[j];
                product *= big_pow(sz, exp);
            }
        }
    }
    return product;
}

double rounding_constant(const PatternFunction& phi, int colours) {
    return (phi.parts() - 1) * std::log2(static_cast<double>(colours));
}

}  // namespace mcfc
