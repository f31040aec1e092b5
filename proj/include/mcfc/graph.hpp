#ifndef MCFC_GRAPH_HPP
#define MCFC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcfc {

// Hosts are desk-scale, so adjacency lives in one 64-bit mask per vertex.
inline constexpr int kMaxVertices = 64;

// Undirected simple graph, vertices 0..n-1, no loops.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    void remove_vertex_edges(int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbours(int v) const { return adj_[v]; }
    std::span<const std::uint64_t> adjacency() const { return adj_; }
    std::uint64_t all_vertices_mask() const;

    int edge_count() const;
    // Edges as (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    int clique_number() const;
    bool has_clique(int size) const;

    static SimpleGraph complete(int n);
    static SimpleGraph complete_multipartite(const std::vector<int>& parts);

    // Text format: first line "n", then one "u v" line per edge (0-based).
    static SimpleGraph parse_edge_list(std::istream& in);
    void write_edge_list(std::ostream& out) const;

    bool operator==(const SimpleGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// True iff `adj` restricted to `candidates` contains a clique on `size`
// vertices. size <= 0 is vacuously true.
bool mask_has_clique(std::span<const std::uint64_t> adj, std::uint64_t candidates, int size);

}  // namespace mcfc

#endif
