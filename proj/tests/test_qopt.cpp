#include <doctest.h>

#include <cmath>
#include <fstream>

#include "mcfc/core_ops.hpp"
#include "mcfc/qopt.hpp"

using namespace mcfc;

namespace {

PatternFunction single_pair_pattern(std::uint32_t list) {
    PatternFunction phi(2);
    phi.set_list(0, 1, list);
    return phi;
}

PatternFunction bundled_affine_pattern() {
    std::ifstream in(std::string(MCFC_DEFAULT_DATA_DIR) + "/affine_plane_4c.pattern");
    REQUIRE(in.good());
    return parse_pattern_file(in).pattern;
}

}  // namespace

TEST_CASE("optimize_alpha") {
    SUBCASE("single pair: balanced interior optimum") {
        auto best = optimize_alpha(single_pair_pattern(0b11));
        CHECK(best.q_value == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(best.alpha[0] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(best.certificate == AlphaOptimum::Certificate::interior_stationary);
        CHECK(best.kkt_residual <= 1e-9);
    }
    SUBCASE("degenerate third part drops to a boundary face") {
        PatternFunction phi(3);
        phi.set_list(0, 1, 0b11);  // only pair with weight
        auto best = optimize_alpha(phi);
        CHECK(best.q_value == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(best.support == std::vector<int>{0, 1});
    }
    SUBCASE("all lists size 2 on three parts: uniform, q = 2/3") {
        PatternFunction phi(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) phi.set_list(i, j, 0b11);
        auto best = optimize_alpha(phi);
        CHECK(best.q_value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(best.alpha[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
        CHECK(best.certificate == AlphaOptimum::Certificate::interior_stationary);
    }
    SUBCASE("affine-plane pattern: uniform, q = (8/9)log2(3)") {
        auto best = optimize_alpha(bundled_affine_pattern());
        CHECK(best.q_value ==
              doctest::Approx((8.0 / 9.0) * std::log2(3.0)).epsilon(1e-9));
        for (int i = 0; i < 9; ++i) {
            CHECK(best.alpha[i] == doctest::Approx(1.0 / 9.0).epsilon(1e-7));
        }
        CHECK(best.certificate == AlphaOptimum::Certificate::interior_stationary);
        CHECK(best.kkt_residual <= 1e-9);
    }
    SUBCASE("twin parts make the full system singular; value still right") {
        // parts 1,2 are twins (same list to part 0, nothing between them),
        // so the full-support stationarity system is rank-deficient and the
        // face falls back to a grid scan; the optimum 1/2 must survive
        PatternFunction phi(3);
        phi.set_list(0, 1, 0b11);
        phi.set_list(0, 2, 0b11);
        auto best = optimize_alpha(phi);
        CHECK(best.q_value == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(best.alpha[0] == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("q_value always re-evaluates exactly") {
        PatternFunction phi(4);
        phi.set_list(0, 1, 0b11);
        phi.set_list(2, 3, 0b01);
        auto best = optimize_alpha(phi);
        CHECK(best.q_value == doctest::Approx(evaluate_q(phi, best.alpha)).epsilon(1e-12));
    }
}

TEST_CASE("grid_oracle") {
    const auto phi = single_pair_pattern(0b11);
    CHECK(grid_oracle(phi, 10).q_value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(grid_oracle(phi, 3).q_value == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    CHECK(grid_oracle(phi, 1).q_value == 0.0);
    CHECK_THROWS_AS(grid_oracle(bundled_affine_pattern(), 120, 1000), budget_exhausted);
}

TEST_CASE("optimizer against the grid oracle") {
    // every pattern class of (3,3) and (4,3) at r <= 3
    for (const char* k : {"3,3", "4,3"}) {
        const auto spec = ColourSpec::parse(k);
        const double logs = std::log2(static_cast<double>(spec.colours()));
        for (int r = 1; r <= 3; ++r) {
            for (const auto& cls : enumerate_patterns(spec, r, 0).classes) {
                auto best = optimize_alpha(cls.pattern);
                auto grid = grid_oracle(cls.pattern, 120);
                CHECK(best.q_value >= grid.q_value - 1e-12);
                CHECK(best.q_value <= grid.q_value + 2.0 * (r / 120.0) * logs + 1e-9);
            }
        }
    }
}

TEST_CASE("solve_Q frozen values") {
    SUBCASE("(4,3) at t=2 caps out at 1/2") {
        auto report = solve_Q(ColourSpec::parse("4,3"), 2, 4);
        REQUIRE(report.best.has_value());
        CHECK(report.best->optimum.q_value == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(report.status == QSolveReport::Status::exhaustive_up_to_rmax);
        CHECK(report.cap_source == "user");
    }
    SUBCASE("(3,3): 1/2 at every rmax") {
        for (int rmax = 2; rmax <= 5; ++rmax) {
            auto report = solve_Q(ColourSpec::parse("3,3"), 2, rmax);
            REQUIRE(report.best.has_value());
            CHECK(report.best->optimum.q_value == doctest::Approx(0.5).epsilon(1e-9));
            CHECK(report.best->r == 2);
        }
    }
    SUBCASE("(4,4): 2/3 on the triangle pattern") {
        for (int rmax = 3; rmax <= 5; ++rmax) {
            auto report = solve_Q(ColourSpec::parse("4,4"), 2, rmax);
            REQUIRE(report.best.has_value());
            CHECK(report.best->optimum.q_value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
            CHECK(report.best->r == 3);
        }
    }
    SUBCASE("rmax capped by the Ramsey limit") {
        auto report = solve_Q(ColourSpec::parse("3,3"), 2, 40);
        CHECK(report.rmax == 5);
        CHECK(report.rmax_requested == 40);
        CHECK(report.cap_source == "ramsey-limit");
    }
}

TEST_CASE("levels 0, 1, 2 agree at bounded r") {
    for (const char* k : {"3,3", "4,3"}) {
        for (int rmax = 2; rmax <= 4; ++rmax) {
            const auto spec = ColourSpec::parse(k);
            auto q0 = solve_Q(spec, 0, rmax);
            auto q1 = solve_Q(spec, 1, rmax);
            auto q2 = solve_Q(spec, 2, rmax);
            REQUIRE(q0.best.has_value());
            REQUIRE(q1.best.has_value());
            REQUIRE(q2.best.has_value());
            CHECK(q0.best->optimum.q_value ==
                  doctest::Approx(q1.best->optimum.q_value).epsilon(1e-9));
            CHECK(q1.best->optimum.q_value ==
                  doctest::Approx(q2.best->optimum.q_value).epsilon(1e-9));
        }
    }
}

TEST_CASE("lp_profile_bound") {
    CHECK(lp_profile_bound(ColourSpec::parse("3,3")) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lp_profile_bound(ColourSpec::parse("4,4")) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(lp_profile_bound(ColourSpec::parse("3,3,3")) ==
          doctest::Approx(0.5 * std::log2(3.0)).epsilon(1e-12));
    CHECK(lp_profile_bound(ColourSpec::parse("3,3,3,3")) ==
          doctest::Approx((2.0 / 3.0) * std::log2(3.0)).epsilon(1e-9));
    CHECK(lp_profile_bound(ColourSpec::parse("4,4,4,4")) ==
          doctest::Approx((8.0 / 9.0) * std::log2(3.0)).epsilon(1e-9));
    CHECK_THROWS_AS(lp_profile_bound(ColourSpec::parse("4,3")), unsupported_spec_error);
}

TEST_CASE("sharp three-colour value: solve meets the LP bound") {
    // F(n;(3,3,3)) = 3^{t_2(n)} asymptotically, so the solve and the LP
    // bound must both land on (1/2)log2(3), already at r = 2
    auto report = solve_Q(ColourSpec::parse("3,3,3"), 2, 4);
    REQUIRE(report.best.has_value());
    REQUIRE(report.lp_bound.has_value());
    CHECK(report.best->optimum.q_value ==
          doctest::Approx(0.5 * std::log2(3.0)).epsilon(1e-9));
    CHECK(report.best->optimum.q_value == doctest::Approx(*report.lp_bound).epsilon(1e-9));
    CHECK(report.best->r == 2);
}

TEST_CASE("rmax cap sources") {
    CHECK(solve_Q(ColourSpec::parse("3,3"), 2, 3).cap_source == "user");
    CHECK(solve_Q(ColourSpec::parse("3,3"), 2, 12).cap_source == "ramsey-limit");
    // R((4,4)) = 18, so the explicit-minimisation limit binds first
    auto capped = solve_Q(ColourSpec::parse("4,4"), 2, 12);
    CHECK(capped.rmax == 8);
    CHECK(capped.cap_source == "canonicalisation-limit");
    CHECK(capped.best->optimum.q_value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("solve never beats the LP bound on uniform specs") {
    for (const char* k : {"3,3", "4,4"}) {
        const auto spec = ColourSpec::parse(k);
        auto report = solve_Q(spec, 1, 3);
        REQUIRE(report.best.has_value());
        REQUIRE(report.lp_bound.has_value());
        CHECK(report.best->optimum.q_value <= *report.lp_bound + 1e-9);
    }
}

TEST_CASE("stability_distance") {
    const auto spec = ColourSpec::parse("3,3");
    auto report = solve_Q(spec, 1, 3);

    SUBCASE("balanced bipartite shape sits on the optimum") {
        auto result = stability_distance(PartitionShape::of({3, 3}), report, 1e-9);
        REQUIRE(result.has_value());
        CHECK(result->distance == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("shape (4,2)") {
        auto result = stability_distance(PartitionShape::of({4, 2}), report, 1e-9);
        REQUIRE(result.has_value());
        CHECK(result->distance == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
    SUBCASE("no recorded triple with the right r") {
        auto result = stability_distance(PartitionShape::of({2, 2, 1, 1}), report, 1e-9);
        CHECK(!result.has_value());
    }
    SUBCASE("exploratory: (3,2,2) against the (4,3) level-1 solve") {
        auto report43 = solve_Q(ColourSpec::parse("4,3"), 1, 3);
        auto result = stability_distance(PartitionShape::of({3, 2, 2}), report43, 1e-2);
        if (result) {
            CHECK(result->distance >= 0.0);
            CHECK(result->distance <= 2.0);
        }
    }
}

TEST_CASE("budget truncation still reports a certified lower bound") {
    auto report = solve_Q(ColourSpec::parse("3,3"), 0, 4, 200);
    CHECK(report.status == QSolveReport::Status::budget_truncated);
    if (report.best) {
        // whatever was reached is a genuine feasible value
        CHECK(report.best->optimum.q_value <= 0.5 + 1e-9);
    }
}

TEST_CASE("reported optimum is invariant under pattern automorphisms") {
    // the degenerate r=3 pattern has an automorphism swapping parts 0,1
    PatternFunction phi(3);
    phi.set_list(0, 1, 0b11);
    auto best = optimize_alpha(phi);
    std::vector<double> swapped = {best.alpha[1], best.alpha[0], best.alpha[2]};
    CHECK(evaluate_q(phi, WeightVector::simplex(std::move(swapped))) ==
          doctest::Approx(best.q_value).epsilon(1e-12));
}
