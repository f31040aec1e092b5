#include <doctest.h>

#include <numeric>
#include <set>

#include "mcfc/patterns.hpp"

using namespace mcfc;

namespace {

std::uint64_t labelled_count(const PatternStream& stream) {
    std::uint64_t sum = 0;
    for (const auto& c : stream.classes) sum += c.orbit_size;
    return sum;
}

}  // namespace

TEST_CASE("enumerate_patterns (3,3)") {
    const auto spec = ColourSpec::parse("3,3");

    SUBCASE("r=2, t=1: two classes, three labelled patterns") {
        auto stream = enumerate_patterns(spec, 2, 1);
        CHECK(stream.classes.size() == 2);
        CHECK(labelled_count(stream) == 3);
        CHECK(!stream.truncated);
    }
    SUBCASE("r=3, t=1: 12 labelled patterns in 2 classes") {
        auto stream = enumerate_patterns(spec, 3, 1);
        CHECK(stream.classes.size() == 2);
        CHECK(labelled_count(stream) == 12);
    }
    SUBCASE("r=3, t=0: 49 labelled patterns in 9 classes") {
        auto stream = enumerate_patterns(spec, 3, 0);
        CHECK(stream.classes.size() == 9);
        CHECK(labelled_count(stream) == 49);
    }
    SUBCASE("r=3, t=2: empty") {
        CHECK(enumerate_patterns(spec, 3, 2).classes.empty());
    }
    SUBCASE("r=1: the empty pattern") {
        CHECK(enumerate_patterns(spec, 1, 2).classes.size() == 1);
    }
}

TEST_CASE("enumerate_patterns (4,3)") {
    const auto spec = ColourSpec::parse("4,3");
    auto r2 = enumerate_patterns(spec, 2, 0);
    CHECK(r2.classes.size() == 4);  // no colour swap: k_1 != k_2
    CHECK(labelled_count(r2) == 4);

    auto r3 = enumerate_patterns(spec, 3, 0);
    CHECK(r3.classes.size() == 16);
    CHECK(labelled_count(r3) == 56);
}

TEST_CASE("emitted patterns pass their feasibility level") {
    for (const char* k : {"3,3", "4,3"}) {
        const auto spec = ColourSpec::parse(k);
        for (int r = 2; r <= 4; ++r) {
            for (int t = 0; t <= 2; ++t) {
                for (const auto& c : enumerate_patterns(spec, r, t).classes) {
                    auto level = feasibility_level(c.pattern, spec);
                    REQUIRE(level.has_value());
                    CHECK(*level >= t);
                }
            }
        }
    }
}

TEST_CASE("enumeration is traversal-order independent") {
    const auto spec = ColourSpec::parse("3,3");
    const int r = 4;
    auto base = enumerate_patterns(spec, r, 0);

    std::vector<int> reversed(r * (r - 1) / 2);
    std::iota(reversed.begin(), reversed.end(), 0);
    std::reverse(reversed.begin(), reversed.end());
    auto flipped = enumerate_patterns(spec, r, 0, kDefaultBudget, &reversed);

    REQUIRE(base.classes.size() == flipped.classes.size());
    for (std::size_t i = 0; i < base.classes.size(); ++i) {
        CHECK(base.classes[i].canonical_code == flipped.classes[i].canonical_code);
        CHECK(base.classes[i].orbit_size == flipped.classes[i].orbit_size);
    }
}

TEST_CASE("budget truncation is flagged") {
    auto stream = enumerate_patterns(ColourSpec::parse("3,3"), 4, 0, 100);
    CHECK(stream.truncated);
    CHECK(stream.nodes == 100);
}

TEST_CASE("canonical_form") {
    const auto spec33 = ColourSpec::parse("3,3");
    const auto spec43 = ColourSpec::parse("4,3");

    PatternFunction colour1(2), colour2(2);
    colour1.set_list(0, 1, 0b01);
    colour2.set_list(0, 1, 0b10);

    SUBCASE("colour swap allowed when k values match") {
        CHECK(canonical_form(colour1, spec33).canonical_code ==
              canonical_form(colour2, spec33).canonical_code);
    }
    SUBCASE("colour swap forbidden when k values differ") {
        CHECK(canonical_form(colour1, spec43).canonical_code !=
              canonical_form(colour2, spec43).canonical_code);
    }
    SUBCASE("part relabelling never changes the code") {
        PatternFunction phi(3), relabelled(3);
        phi.set_list(0, 1, 0b11);
        phi.set_list(0, 2, 0b01);
        relabelled.set_list(1, 2, 0b11);
        relabelled.set_list(1, 0, 0b01);
        CHECK(canonical_form(phi, spec33).canonical_code ==
              canonical_form(relabelled, spec33).canonical_code);
    }
    SUBCASE("idempotent") {
        PatternFunction phi(3);
        phi.set_list(0, 2, 0b10);
        phi.set_list(1, 2, 0b11);
        auto canon = canonical_form(phi, spec33);
        auto again = canonical_form(canon.pattern, spec33);
        CHECK(canon.canonical_code == again.canonical_code);
        CHECK(canon.pattern == again.pattern);
    }
}

TEST_CASE("ramsey_limit") {
    SUBCASE("table hits") {
        auto l33 = ramsey_limit(ColourSpec::parse("3,3"));
        CHECK(l33.value == 6);
        CHECK(l33.kind == RamseyLimit::Kind::exact_known);

        // lookup is order-insensitive
        auto l43 = ramsey_limit(ColourSpec::parse("4,3"));
        CHECK(l43.value == 9);
        CHECK(l43.kind == RamseyLimit::Kind::exact_known);

        CHECK(ramsey_limit(ColourSpec::parse("3,3,3")).value == 17);
    }
    SUBCASE("multinomial fallback") {
        auto l = ramsey_limit(ColourSpec::parse("4,3,3"));
        CHECK(l.value == 210);  // 7!/(3!2!2!)
        CHECK(l.kind == RamseyLimit::Kind::upper_bound);
    }
    SUBCASE("appending a colour never decreases the limit") {
        for (const char* k : {"3,3", "4,3", "3,3,3", "4,4"}) {
            auto spec = ColourSpec::parse(k);
            auto extended = spec;
            extended.k.push_back(3);
            CHECK(ramsey_limit(extended).value >= ramsey_limit(spec).value);
        }
    }
}

TEST_CASE("verify_ramsey (3,3)") {
    const auto spec = ColourSpec::parse("3,3");

    auto at5 = verify_ramsey(spec, 5);
    REQUIRE(at5.decision == RamseyDecision::admits);
    // the witness must be valid, and both colour classes of any valid
    // 2-colouring of K_5 are 5-cycles
    const auto k5 = SimpleGraph::complete(5);
    CHECK(is_valid_colouring(k5, at5.witness, spec));
    const auto edges = k5.edges();
    for (int c = 0; c < 2; ++c) {
        std::vector<int> degree(5, 0);
        int count = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (at5.witness[e] == c) {
                degree[edges[e].first]++;
                degree[edges[e].second]++;
                ++count;
            }
        }
        CHECK(count == 5);
        for (int v = 0; v < 5; ++v) CHECK(degree[v] == 2);
    }

    CHECK(verify_ramsey(spec, 6).decision == RamseyDecision::does_not_admit);
    CHECK(verify_ramsey(ColourSpec::parse("4,3"), 2).decision == RamseyDecision::admits);
}

TEST_CASE("verify upgrades the table entry") {
    auto verified = verify_ramsey_limit(ColourSpec::parse("3,3"), kDefaultBudget);
    CHECK(verified.value == 6);
    CHECK(verified.kind == RamseyLimit::Kind::exact_verified);
}

TEST_CASE("verify_ramsey returns undecided on a starved budget") {
    CHECK_THROWS_AS(verify_ramsey(ColourSpec::parse("3,3"), 6, 20), budget_exhausted);
}

TEST_CASE("list_ramsey_search brackets R_2((3,3)) = 3") {
    const auto spec = ColourSpec::parse("3,3");

    auto r2 = list_ramsey_search(spec, 2);
    CHECK(!r2.forced);
    REQUIRE(r2.witness.has_value());
    CHECK(r2.witness->list_size(0, 1) == 2);

    auto r3 = list_ramsey_search(spec, 3);
    CHECK(r3.forced);

    CHECK_THROWS_AS(list_ramsey_search(ColourSpec::parse("5,5,5"), 19, 1000),
                    budget_exhausted);
}
