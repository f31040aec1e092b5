#include "mcfc/graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "mcfc/errors.hpp"

namespace mcfc {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > kMaxVertices) {
        throw structural_error("vertex count must be in [0, 64]");
    }
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw structural_error("edge endpoint out of range");
    if (u == v) throw structural_error("loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_vertex_edges(int v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (int u = 0; u < n_; ++u) adj_[u] &= ~bit;
    adj_[v] = 0;
}

std::uint64_t SimpleGraph::all_vertices_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

int SimpleGraph::edge_count() const {
    int twice = 0;
    for (std::uint64_t m : adj_) twice += std::popcount(m);
    return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

bool mask_has_clique(std::span<const std::uint64_t> adj, std::uint64_t candidates, int size) {
    if (size <= 0) return true;
    if (std::popcount(candidates) < size) return false;
    if (size == 1) return true;
    std::uint64_t rest = candidates;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        // every clique has a least vertex, so only recurse upward
        if (mask_has_clique(adj, rest & adj[v], size - 1)) return true;
    }
    return false;
}

bool SimpleGraph::has_clique(int size) const {
    return mask_has_clique(adj_, all_vertices_mask(), size);
}

int SimpleGraph::clique_number() const {
    if (n_ == 0) return 0;
    int w = 1;
    while (w < n_ && has_clique(w + 1)) ++w;
    return w;
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw structural_error("part sizes must be non-negative");
        n += p;
    }
    SimpleGraph g(n);
    std::vector<int> label(n);
    int at = 0;
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
        for (int i = 0; i < parts[pi]; ++i) label[at++] = static_cast<int>(pi);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (label[u] != label[v]) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::parse_edge_list(std::istream& in) {
    int n;
    if (!(in >> n)) throw structural_error("graph file: missing vertex count");
    SimpleGraph g(n);
    int u;
    while (in >> u) {
        int v;
        if (!(in >> v)) throw structural_error("graph file: dangling edge endpoint");
        g.add_edge(u, v);
    }
    if (!in.eof()) throw structural_error("graph file: malformed edge line");
    return g;
}

void SimpleGraph::write_edge_list(std::ostream& out) const {
    out << n_ << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
}

}  // namespace mcfc
