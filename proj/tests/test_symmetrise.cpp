#include <doctest.h>

#include <random>

#include "mcfc/symmetrise.hpp"

using namespace mcfc;

namespace {

SimpleGraph path4() {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

SimpleGraph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

BigInt exact(const SimpleGraph& g, const ColourSpec& spec) {
    CountJob job{g, spec, kDefaultBudget, 1};
    return count_colourings(job).value;
}

}  // namespace

TEST_CASE("twin_partition") {
    SUBCASE("balanced bipartite") {
        auto classes = twin_partition(SimpleGraph::complete_multipartite({3, 3}));
        REQUIRE(classes.size() == 2);
        CHECK(classes[0].size() == 3);
        CHECK(classes[1].size() == 3);
    }
    SUBCASE("path: all singletons") {
        CHECK(twin_partition(path4()).size() == 4);
    }
    SUBCASE("star: centre and leaves") {
        SimpleGraph star(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        auto classes = twin_partition(star);
        REQUIRE(classes.size() == 2);
        CHECK(classes[0] == std::vector<int>{0});
        CHECK(classes[1].size() == 3);
    }
}

TEST_CASE("is_complete_multipartite") {
    CHECK(is_complete_multipartite(SimpleGraph::complete_multipartite({3, 2, 1})));
    CHECK(is_complete_multipartite(SimpleGraph(3)));  // one part
    CHECK(is_complete_multipartite(SimpleGraph::complete(4)));
    CHECK(!is_complete_multipartite(path4()));
}

TEST_CASE("clone_replace") {
    const auto spec = ColourSpec::parse("3,3");

    SUBCASE("cloning c over a turns the path into C4") {
        const auto g = path4();
        CHECK(exact(g, spec) == 8);
        auto cloned = clone_replace(g, 2, 0);  // clone vertex c over a
        const std::vector<std::pair<int, int>> c4_edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
        CHECK(cloned.edges() == c4_edges);
        CHECK(is_complete_multipartite(cloned));
        CHECK(exact(cloned, spec) == 16);
    }
    SUBCASE("cloning over a twin changes nothing") {
        const auto g = SimpleGraph::complete_multipartite({3, 3});
        CHECK(clone_replace(g, 0, 1) == g);
    }
    SUBCASE("empty graph stays empty") {
        CHECK(clone_replace(SimpleGraph(3), 0, 2) == SimpleGraph(3));
    }
    SUBCASE("cloning across an edge is rejected") {
        CHECK_THROWS_AS(clone_replace(path4(), 0, 1), structural_error);
    }
}

TEST_CASE("step inequalities on random graphs") {
    std::mt19937 rng(314159);
    const auto spec = ColourSpec::parse("3,3");
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);  // n <= 7
        const auto g = random_graph(rng, n);
        const BigInt f = exact(g, spec);
        for (int u = 0; u < n && checked < 200; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                const BigInt f_u = exact(clone_replace(g, u, v), spec);
                const BigInt f_v = exact(clone_replace(g, v, u), spec);
                CHECK(2 * f <= f_u + f_v);
                CHECK(f * f <= f_u * f_v);
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("symmetrise the path") {
    auto trace = symmetrise(path4(), ColourSpec::parse("3,3"));
    CHECK(trace.complete);
    CHECK(trace.f_initial.value == 8);
    CHECK(trace.f_final.value == 16);
    CHECK(trace.final_shape == PartitionShape::of({2, 2}));
    CHECK(trace.steps.size() <= 3);
    CHECK(is_complete_multipartite(trace.final_graph));
}

TEST_CASE("already multipartite: zero steps") {
    auto trace = symmetrise(SimpleGraph::complete_multipartite({3, 3}), ColourSpec::parse("3,3"));
    CHECK(trace.steps.empty());
    CHECK(trace.final_graph == SimpleGraph::complete_multipartite({3, 3}));

    // C4 = K_{2,2} up to labels
    SimpleGraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(0, 3);
    auto c4_trace = symmetrise(c4, ColourSpec::parse("3,3"));
    CHECK(c4_trace.steps.empty());
    CHECK(c4_trace.final_shape == PartitionShape::of({2, 2}));
}

TEST_CASE("symmetrisation property suite") {
    // 100 deterministic pseudo-random graphs, n <= 7
    std::mt19937 rng(1u);
    const auto spec = ColourSpec::parse("3,3");
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const auto g = random_graph(rng, n, 0.4 + 0.2 * (trial % 3));
        auto trace = symmetrise(g, spec);
        REQUIRE(trace.complete);
        CHECK(is_complete_multipartite(trace.final_graph));
        CHECK(static_cast<int>(trace.steps.size()) <= n - 1);
        CHECK(trace.f_final.value >= trace.f_initial.value);
        for (const auto& step : trace.steps) {
            CHECK(2 * step.f_before.value <= step.f_u.value + step.f_v.value);
            CHECK(step.f_before.value * step.f_before.value <=
                  step.f_u.value * step.f_v.value);
            CHECK(step.f_after.value >= step.f_before.value);
            // the potential argument covers cloning the maximal-class side;
            // keeping G_v (forced by a strictly larger count) can stall it
            if (step.kept == 'u') {
                CHECK(step.potential_after > step.potential_before);
            }
        }
    }
}

TEST_CASE("budget exhaustion flags the trace") {
    // needs a host with triangles: triangle-free counts shortcut past the
    // node budget entirely
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    auto trace = symmetrise(g, ColourSpec::parse("3,3"), 5);
    CHECK(!trace.complete);
}
