#include "mcfc/counting.hpp"

#include <algorithm>
#include <bit>

namespace mcfc {

namespace {

// Edges ordered so each new edge touches as many already-ordered edges as
// possible; drives the clique pruning early. Ties go lexicographic.
std::vector<std::pair<int, int>> order_edges(const SimpleGraph& g) {
    auto remaining = g.edges();
    std::vector<std::pair<int, int>> order;
    std::vector<int> chosen_deg(g.vertex_count(), 0);
    while (!remaining.empty()) {
        std::size_t best = 0;
        int best_score = -1;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            const int score = chosen_deg[remaining[i].first] + chosen_deg[remaining[i].second];
            if (score > best_score) {
                best = i;
                best_score = score;
            }
        }
        auto edge = remaining[best];
        remaining.erase(remaining.begin() + best);
        chosen_deg[edge.first]++;
        chosen_deg[edge.second]++;
        order.push_back(edge);
    }
    return order;
}

struct EngineSetup {
    std::vector<std::pair<int, int>> order;  // edges in search order
    std::vector<int> clique_rest;            // k_c - 2 per colour
    int s = 0;
    int n = 0;
    int m = 0;
};

// Per-branch mutable state: one adjacency mask set per colour.
struct ColourState {
    std::vector<std::uint64_t> adj;  // s * n masks, colour-major
    int n;

    ColourState(int s, int n_) : adj(static_cast<std::size_t>(s) * n_, 0), n(n_) {}

    std::span<const std::uint64_t> colour(int c) const {
        return {adj.data() + static_cast<std::size_t>(c) * n, static_cast<std::size_t>(n)};
    }
    void set(int c, int u, int v) {
        adj[static_cast<std::size_t>(c) * n + u] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(c) * n + v] |= std::uint64_t{1} << u;
    }
    void clear(int c, int u, int v) {
        adj[static_cast<std::size_t>(c) * n + u] &= ~(std::uint64_t{1} << v);
        adj[static_cast<std::size_t>(c) * n + v] &= ~(std::uint64_t{1} << u);
    }
};

// Would assigning colour c to uv close a K_{k_c}? Exactly when the common
// c-neighbours of u and v span a K_{k_c - 2} in colour c.
inline bool assignment_ok(const EngineSetup& setup, const ColourState& state, int c, int u,
                          int v) {
    const auto adj = state.colour(c);
    const std::uint64_t common = adj[u] & adj[v];
    return !mask_has_clique(adj, common, setup.clique_rest[c]);
}

struct SubtreeResult {
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
    bool completed = true;
};

// Count the subtree below `depth`, spending at most `cap` expansions.
SubtreeResult search_subtree(const EngineSetup& setup, ColourState& state, int depth,
                             std::uint64_t cap) {
    SubtreeResult result;
    if (depth == setup.m) {
        result.leaves = 1;
        return result;
    }
    const auto [u, v] = setup.order[depth];
    for (int c = 0; c < setup.s; ++c) {
        if (result.nodes == cap) {
            result.completed = false;
            return result;
        }
        ++result.nodes;
        if (!assignment_ok(setup, state, c, u, v)) continue;
        state.set(c, u, v);
        auto below = search_subtree(setup, state, depth + 1, cap - result.nodes);
        state.clear(c, u, v);
        result.leaves += below.leaves;
        result.nodes += below.nodes;
        if (!below.completed) {
            result.completed = false;
            return result;
        }
    }
    return result;
}

struct Prefix {
    std::vector<int> colours;  // one per prefix edge
    std::uint64_t lead;        // expansions since the previous capture
};

// DFS over the first `d` levels only. Captured prefixes, in order, split
// the full tree exactly as the serial search would visit it: the serial
// expansion sequence is lead_1, subtree_1, lead_2, subtree_2, ..., tail.
struct PrefixWalk {
    std::vector<Prefix> prefixes;
    std::uint64_t tail = 0;       // trailing expansions after the last capture
    std::uint64_t since_capture = 0;

    void run(const EngineSetup& setup, ColourState& state, std::vector<int>& stack, int depth,
             int d) {
        if (depth == d) {
            prefixes.push_back({stack, since_capture});
            since_capture = 0;
            return;
        }
        const auto [u, v] = setup.order[depth];
        for (int c = 0; c < setup.s; ++c) {
            ++since_capture;
            if (!assignment_ok(setup, state, c, u, v)) continue;
            state.set(c, u, v);
            stack.push_back(c);
            run(setup, state, stack, depth + 1, d);
            stack.pop_back();
            state.clear(c, u, v);
        }
    }
};

ColourState replay_prefix(const EngineSetup& setup, const Prefix& prefix) {
    ColourState state(setup.s, setup.n);
    for (std::size_t e = 0; e < prefix.colours.size(); ++e) {
        state.set(prefix.colours[e], setup.order[e].first, setup.order[e].second);
    }
    return state;
}

int prefix_depth(int s, int parallel_width, int m) {
    if (parallel_width <= 1) return 0;
    int d = 0;
    std::uint64_t subtrees = 1;
    while (subtrees < static_cast<std::uint64_t>(parallel_width) && d < m) {
        subtrees *= s;
        ++d;
    }
    return d;
}

}  // namespace

bool is_valid_colouring(const SimpleGraph& graph, std::span<const int> colouring,
                        const ColourSpec& spec) {
    spec.validate();
    const auto edges = graph.edges();
    if (colouring.size() != edges.size()) {
        throw structural_error("colouring must assign every edge exactly one colour");
    }
    for (int c : colouring) {
        if (c < 0 || c >= spec.colours()) throw structural_error("colour out of range");
    }
    const std::uint64_t all = graph.all_vertices_mask();
    for (int c = 0; c < spec.colours(); ++c) {
        std::vector<std::uint64_t> adj(graph.vertex_count(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (colouring[e] == c) {
                adj[edges[e].first] |= std::uint64_t{1} << edges[e].second;
                adj[edges[e].second] |= std::uint64_t{1} << edges[e].first;
            }
        }
        if (mask_has_clique(adj, all, spec.k[c])) return false;
    }
    return true;
}

BigInt count_reference(const SimpleGraph& graph, const ColourSpec& spec) {
    spec.validate();
    const int m = graph.edge_count();
    const int s = spec.colours();
    std::vector<int> colouring(m, 0);
    BigInt total = 0;
    // odometer over all s^m colourings
    while (true) {
        if (is_valid_colouring(graph, colouring, spec)) ++total;
        int pos = 0;
        while (pos < m && ++colouring[pos] == s) colouring[pos++] = 0;
        if (pos == m) break;
    }
    return total;
}

CountOutcome count_colourings(const CountJob& job) {
    job.spec.validate();
    if (job.budget == 0) throw structural_error("budget must be positive");
    if (job.parallel_width < 1) throw structural_error("parallel width must be >= 1");

    EngineSetup setup;
    setup.s = job.spec.colours();
    setup.n = job.graph.vertex_count();
    setup.m = job.graph.edge_count();
    if (setup.m == 0) return {BigInt(1), 0};

    // a host without any forbidden clique admits every colouring
    if (job.graph.clique_number() < job.spec.min_k()) {
        return {big_pow(setup.s, setup.m), 0};
    }

    setup.order = order_edges(job.graph);
    setup.clique_rest.resize(setup.s);
    for (int c = 0; c < setup.s; ++c) setup.clique_rest[c] = job.spec.k[c] - 2;

    const int d = prefix_depth(setup.s, job.parallel_width, setup.m);
    const std::uint64_t budget = job.budget;

    PrefixWalk walk;
    {
        ColourState state(setup.s, setup.n);
        std::vector<int> stack;
        walk.run(setup, state, stack, 0, d);
        walk.tail = walk.since_capture;
    }

    const int subtree_count = static_cast<int>(walk.prefixes.size());
    std::vector<SubtreeResult> results(subtree_count);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int i = 0; i < subtree_count; ++i) {
        ColourState state = replay_prefix(setup, walk.prefixes[i]);
        results[i] = search_subtree(setup, state, d, budget);
    }

    // Deterministic accumulation in serial order; a subtree that crosses
    // the budget line is re-run with the exact remaining allowance so the
    // partial count matches a width-1 run bit for bit.
    BigInt total = 0;
    std::uint64_t consumed = 0;
    for (int i = 0; i < subtree_count; ++i) {
        if (consumed + walk.prefixes[i].lead > budget) {
            throw budget_exhausted(budget, total, "node budget exhausted");
        }
        consumed += walk.prefixes[i].lead;
        const std::uint64_t remaining = budget - consumed;
        if (!results[i].completed || results[i].nodes > remaining) {
            ColourState state = replay_prefix(setup, walk.prefixes[i]);
            auto partial = search_subtree(setup, state, d, remaining);
            throw budget_exhausted(budget, total + partial.leaves, "node budget exhausted");
        }
        consumed += results[i].nodes;
        total += results[i].leaves;
    }
    if (consumed + walk.tail > budget) {
        throw budget_exhausted(budget, total, "node budget exhausted");
    }
    consumed += walk.tail;
    return {total, consumed};
}

CountOutcome count_shape(const PartitionShape& shape, const ColourSpec& spec,
                         std::uint64_t budget, int parallel_width) {
    CountJob job;
    job.graph = SimpleGraph::complete_multipartite(shape.parts);
    job.spec = spec;
    job.budget = budget;
    job.parallel_width = parallel_width;
    return count_colourings(job);
}

std::optional<std::vector<int>> find_valid_colouring(const SimpleGraph& graph,
                                                     const ColourSpec& spec,
                                                     std::uint64_t budget,
                                                     std::uint64_t& nodes_used) {
    spec.validate();
    EngineSetup setup;
    setup.s = spec.colours();
    setup.n = graph.vertex_count();
    setup.m = graph.edge_count();
    setup.order = order_edges(graph);
    setup.clique_rest.resize(setup.s);
    for (int c = 0; c < setup.s; ++c) setup.clique_rest[c] = spec.k[c] - 2;

    ColourState state(setup.s, setup.n);
    std::vector<int> assignment(setup.m, -1);
    std::uint64_t nodes = 0;
    bool found = false;

    auto dfs = [&](auto&& self, int depth) -> bool {  // returns true when budget holds
        if (depth == setup.m) {
            found = true;
            return true;
        }
        const auto [u, v] = setup.order[depth];
        for (int c = 0; c < setup.s; ++c) {
            if (nodes == budget) return false;
            ++nodes;
            if (!assignment_ok(setup, state, c, u, v)) continue;
            state.set(c, u, v);
            assignment[depth] = c;
            const bool within = self(self, depth + 1);
            if (found) return true;
            state.clear(c, u, v);
            assignment[depth] = -1;
            if (!within) return false;
        }
        return true;
    };
    const bool within = dfs(dfs, 0);
    nodes_used += nodes;
    if (!within && !found) {
        throw budget_exhausted(nodes, BigInt(0), "colouring search budget exhausted");
    }
    if (!found) return std::nullopt;

    // map back from search order to graph.edges() order
    const auto original = graph.edges();
    std::vector<int> colouring(setup.m, 0);
    for (int e = 0; e < setup.m; ++e) {
        const auto it = std::find(original.begin(), original.end(), setup.order[e]);
        colouring[it - original.begin()] = assignment[e];
    }
    return colouring;
}

ExtremalReport search_extremal(int n, const ColourSpec& spec, std::uint64_t budget,
                               int parallel_width) {
    spec.validate();
    if (n < 1) throw structural_error("search_extremal needs n >= 1");

    ExtremalReport report;
    report.n = n;
    report.spec = spec;

    const auto shapes = partitions_of(n);
    bool have_best = false;
    BigInt best = 0;
    std::uint64_t used = 0;

    for (std::size_t at = 0; at < shapes.size(); ++at) {
        const auto& shape = shapes[at];
        const BigInt trivial_bound =
            big_pow(spec.colours(), static_cast<std::uint64_t>(shape.edge_count()));
        if (have_best && trivial_bound <= best) {
            report.pruned_shapes.push_back(
                {shape, "trivial bound " + std::to_string(spec.colours()) + "^" +
                            std::to_string(shape.edge_count()) + " <= best " + best.str()});
            continue;
        }
        CountOutcome outcome;
        try {
            if (used >= budget) throw budget_exhausted(0, BigInt(0), "node budget exhausted");
            outcome = count_shape(shape, spec, budget - used, parallel_width);
        } catch (const budget_exhausted& e) {
            report.complete = false;
            report.nodes = used + e.nodes;
            for (std::size_t rest = at; rest < shapes.size(); ++rest) {
                report.unfinished.push_back(shapes[rest]);
            }
            break;
        }
        used += outcome.nodes;
        report.per_shape[shape] = BigCount{outcome.value};
        if (!have_best || outcome.value > best) {
            have_best = true;
            best = outcome.value;
            report.argmax_shapes.clear();
            report.argmax_shapes.push_back(shape);
        } else if (outcome.value == best) {
            report.argmax_shapes.push_back(shape);
        }
    }
    if (report.complete) report.nodes = used;
    report.best_value = BigCount{best};
    return report;
}

}  // namespace mcfc
