#include "mcfc/symmetrise.hpp"

#include <algorithm>
#include <map>

namespace mcfc {

std::vector<std::vector<int>> twin_partition(const SimpleGraph& graph) {
    std::map<std::uint64_t, std::vector<int>> by_neighbourhood;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        by_neighbourhood[graph.neighbours(v)].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [mask, members] : by_neighbourhood) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

bool is_complete_multipartite(const SimpleGraph& graph) {
    for (int u = 0; u < graph.vertex_count(); ++u) {
        for (int v = u + 1; v < graph.vertex_count(); ++v) {
            if (!graph.has_edge(u, v) && graph.neighbours(u) != graph.neighbours(v)) {
                return false;
            }
        }
    }
    return true;
}

SimpleGraph clone_replace(const SimpleGraph& graph, int u, int v) {
    if (u == v) throw structural_error("clone_replace needs two distinct vertices");
    if (graph.has_edge(u, v)) {
        throw structural_error("clone_replace is undefined across an edge");
    }
    SimpleGraph out = graph;
    out.remove_vertex_edges(v);
    std::uint64_t nbrs = graph.neighbours(u);
    while (nbrs) {
        const int w = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (w != v) out.add_edge(v, w);
    }
    return out;
}

int frozen_potential(const SimpleGraph& graph) {
    const std::uint64_t all = graph.all_vertices_mask();
    int frozen_sum = 0;
    int largest_unfrozen = 0;
    for (const auto& members : twin_partition(graph)) {
        std::uint64_t class_mask = 0;
        for (int v : members) class_mask |= std::uint64_t{1} << v;
        // frozen: the shared neighbourhood is the entire complement
        const bool frozen = graph.neighbours(members.front()) == (all & ~class_mask);
        if (frozen) frozen_sum += static_cast<int>(members.size());
        else largest_unfrozen = std::max(largest_unfrozen, static_cast<int>(members.size()));
    }
    return frozen_sum + largest_unfrozen;
}

namespace {

// The pair selection of the cloning process: non-adjacent, not twins,
// |[u]~| maximal, ties broken by smallest u then smallest v.
struct PairChoice {
    int u = -1, v = -1;
    int class_size = 0;
};

PairChoice choose_pair(const SimpleGraph& graph) {
    std::vector<int> class_size(graph.vertex_count(), 0);
    for (const auto& members : twin_partition(graph)) {
        for (int v : members) class_size[v] = static_cast<int>(members.size());
    }
    PairChoice best;
    for (int u = 0; u < graph.vertex_count(); ++u) {
        for (int v = 0; v < graph.vertex_count(); ++v) {
            if (u == v || graph.has_edge(u, v)) continue;
            if (graph.neighbours(u) == graph.neighbours(v)) continue;
            if (class_size[u] > best.class_size) best = {u, v, class_size[u]};
        }
    }
    return best;
}

PartitionShape twin_shape(const SimpleGraph& graph) {
    std::vector<int> sizes;
    for (const auto& members : twin_partition(graph)) {
        sizes.push_back(static_cast<int>(members.size()));
    }
    return PartitionShape::of(std::move(sizes));
}

}  // namespace

SymmetrisationTrace symmetrise(const SimpleGraph& graph, const ColourSpec& spec,
                               std::uint64_t budget, int parallel_width) {
    spec.validate();
    SymmetrisationTrace trace;
    SimpleGraph current = graph;
    std::uint64_t used = 0;

    auto count_with = [&](const SimpleGraph& g) {
        if (used >= budget) throw budget_exhausted(used, BigInt(0), "node budget exhausted");
        CountJob job;
        job.graph = g;
        job.spec = spec;
        job.budget = budget - used;
        job.parallel_width = parallel_width;
        auto outcome = count_colourings(job);
        used += outcome.nodes;
        return outcome.value;
    };

    BigInt f_current = 0;
    try {
        f_current = count_with(current);
        trace.f_initial = BigCount{f_current};

        const int max_steps = std::max(graph.vertex_count() - 1, 0);
        for (int step = 0; step <= max_steps; ++step) {
            const auto pair = choose_pair(current);
            if (pair.u < 0) break;  // complete multipartite
            if (step == max_steps) {
                throw structural_error("symmetrisation failed to terminate in n-1 steps");
            }

            SymmetrisationStep record;
            record.u = pair.u;
            record.v = pair.v;
            record.f_before = BigCount{f_current};
            record.potential_before = frozen_potential(current);

            const SimpleGraph g_u = clone_replace(current, pair.u, pair.v);
            const SimpleGraph g_v = clone_replace(current, pair.v, pair.u);
            const BigInt f_u = count_with(g_u);
            const BigInt f_v = count_with(g_v);
            record.f_u = BigCount{f_u};
            record.f_v = BigCount{f_v};

            if (f_u >= f_v) {
                current = g_u;
                f_current = f_u;
                record.kept = 'u';
            } else {
                current = g_v;
                f_current = f_v;
                record.kept = 'v';
            }
            record.f_after = BigCount{f_current};
            record.potential_after = frozen_potential(current);
            trace.steps.push_back(std::move(record));
        }
    } catch (const budget_exhausted&) {
        trace.complete = false;
    }
    trace.f_final = BigCount{f_current};

    trace.final_graph = current;
    trace.final_shape = twin_shape(current);
    trace.nodes = used;
    return trace;
}

}  // namespace mcfc
