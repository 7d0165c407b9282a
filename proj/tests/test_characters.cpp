#include "doctest.h"

#include "futaki/characters.hpp"
#include "futaki/errors.hpp"

#include <vector>

using namespace futaki;

namespace {

AmbientSpec generic_plane() { return AmbientSpec(2, {2, 0, 1}); }

HypersurfaceSpec cubic_threefold(std::vector<long> weights, long defining_weight = 0) {
    return HypersurfaceSpec(AmbientSpec(4, std::move(weights)), 3, defining_weight);
}

}  // namespace

TEST_CASE("ambient closed forms") {
    const AmbientSpec line(1, {1, -1});
    auto s = ambient_character(line, 7);
    CHECK(s.k == 7);
    CHECK(s.chi == Rational(8));
    CHECK(s.weight == Rational(0));  // trace-free action

    // chi depends only on d: sections of O(3) on P^4.
    CHECK(ambient_character(AmbientSpec(4, {3, 1, 4, 1, 5}), 3).chi == Rational(35));

    auto t = ambient_character(generic_plane(), 2);
    CHECK(t.chi == Rational(6));
    // Monomial weights of O(2) on P^2 with alpha = (2,0,1):
    // 4, 0, 2, 2, 3, 1 summing to 12.
    CHECK(t.weight == Rational(12));

    CHECK(ambient_character(generic_plane(), 0).chi == Rational(1));
    CHECK(ambient_character(generic_plane(), 0).weight == Rational(0));
}

TEST_CASE("hypersurface characters via the ideal sequence") {
    const auto fd = cubic_threefold({1, 1, -2, 0, 0});
    auto s1 = hypersurface_character(fd, 1);
    CHECK(s1.chi == Rational(5));
    CHECK(s1.weight == Rational(0));
    CHECK(hypersurface_character(fd, 3).chi == Rational(34));  // 35 - 1

    // The pentahedral-type family action has identically vanishing weight.
    const auto fab = cubic_threefold({-2, -1, 0, 1, 2});
    for (long k = 0; k <= 6; ++k) {
        CHECK(hypersurface_character(fab, k).weight == Rational(0));
    }
}

TEST_CASE("polytope characters by lattice point enumeration") {
    const PolytopeSpec segment(1, {{0}, {1}}, {1});
    auto s = polytope_character(segment, 3);
    CHECK(s.chi == Rational(4));    // {0,1,2,3}
    CHECK(s.weight == Rational(6));  // 0+1+2+3

    const PolytopeSpec triangle(2, {{0, 0}, {1, 0}, {0, 1}}, {1, 1});
    auto t = polytope_character(triangle, 2);
    CHECK(t.chi == Rational(6));
    // Pairings over 2P: 0,1,2,1,2,2 -> 8.
    CHECK(t.weight == Rational(8));

    // Corner-cut triangle conv{(1,0),(2,0),(0,2),(0,1)} at k=1:
    // (1,0),(2,0),(0,1),(0,2),(1,1) -> 5 points.
    const PolytopeSpec cut(2, {{1, 0}, {2, 0}, {0, 2}, {0, 1}}, {1, 0});
    auto c = polytope_character(cut, 1);
    CHECK(c.chi == Rational(5));
    CHECK(c.weight == Rational(4));  // first coordinates 1+2+0+0+1
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(AmbientSpec(0, {1}), invalid_input);
    CHECK_THROWS_AS(AmbientSpec(2, {1, 2}), invalid_input);

    CHECK_THROWS_AS(HypersurfaceSpec(AmbientSpec(2, {1, 1, 1}), 0, 0), invalid_input);
    // No degree-2 invariant of weight 5 exists for weights (1,1,1).
    CHECK_THROWS_AS(HypersurfaceSpec(AmbientSpec(2, {1, 1, 1}), 2, 5), invalid_input);
    CHECK_NOTHROW(HypersurfaceSpec(AmbientSpec(2, {1, 1, 1}), 2, 2));
    // Parity obstruction for weights (2,2,2).
    CHECK_THROWS_AS(HypersurfaceSpec(AmbientSpec(2, {2, 2, 2}), 2, 3), invalid_input);

    CHECK_THROWS_AS(PolytopeSpec(2, {{0, 0}, {1, 0}}, {1, 1}), invalid_input);
    CHECK_THROWS_AS(PolytopeSpec(2, {{0, 0}, {1, 0}, {2, 0}}, {1, 1}), invalid_input);
    CHECK_THROWS_AS(PolytopeSpec(2, {{0, 0}, {1, 0}, {0, 1}}, {1}), invalid_input);
    CHECK_THROWS_AS(PolytopeSpec(0, {{}, {}}, {}), invalid_input);
    CHECK_THROWS_AS(PolytopeSpec(2, {{0, 0}, {1, 0}, {0, 1, 2}}, {1, 1}), invalid_input);

    const VarietySpec amb{AmbientSpec(1, {0, 0})};
    CHECK_THROWS_AS(character(amb, -1), invalid_input);
}

TEST_CASE("brute force agrees with the closed forms") {
    const AmbientSpec amb(2, {2, 0, 1}, 1);
    for (long k : {0L, 1L, 5L}) {
        auto closed = ambient_character(amb, k);
        auto brute = brute_force_character(amb, k);
        CHECK(closed.chi == brute.chi);
        CHECK(closed.weight == brute.weight);
    }

    const auto fd = cubic_threefold({1, 1, -2, 0, 0});
    for (long k : {1L, 4L}) {
        auto closed = hypersurface_character(fd, k);
        auto brute = brute_force_character(fd, k);
        CHECK(closed.chi == brute.chi);
        CHECK(closed.weight == brute.weight);
    }

    // Nontrivial defining weight: invariant conic x0*x2 = x1^2 for (0,1,2).
    const HypersurfaceSpec conic(AmbientSpec(2, {0, 1, 2}), 2, 2);
    for (long k : {0L, 1L, 2L, 3L, 6L}) {
        auto closed = hypersurface_character(conic, k);
        auto brute = brute_force_character(conic, k);
        CHECK(closed.chi == brute.chi);
        CHECK(closed.weight == brute.weight);
    }
}

TEST_CASE("enumeration cap raises resource_limit") {
    CHECK_THROWS_AS(brute_force_character(AmbientSpec(4, {1, 1, 1, 1, 1}), 10, 50),
                    resource_limit);
    CHECK_NOTHROW(brute_force_character(AmbientSpec(1, {1, 1}), 10, 50));
}

TEST_CASE("linearization twist adds k times chi to the weight") {
    const std::vector<VarietySpec> specs = {
        VarietySpec{AmbientSpec(2, {2, 0, 1})},
        VarietySpec{cubic_threefold({1, 1, -2, 0, 0})},
        VarietySpec{PolytopeSpec(2, {{0, 0}, {1, 0}, {0, 1}}, {1, 1})},
    };
    for (const auto& spec : specs) {
        for (long lambda : {-2L, 0L, 3L}) {
            for (long k = 0; k <= 5; ++k) {
                auto base = character(with_shift(spec, lambda), k);
                auto up = character(with_shift(spec, lambda + 1), k);
                CHECK(up.chi == base.chi);
                CHECK(up.weight - base.weight == Rational(k) * base.chi);
            }
        }
    }
}

TEST_CASE("trace-free ambient actions have vanishing weight") {
    const AmbientSpec tf(3, {2, -1, -1, 0});
    for (long k = 0; k <= 10; ++k) {
        CHECK(ambient_character(tf, k).weight == Rational(0));
    }
}

TEST_CASE("dimension dispatch") {
    CHECK(dimension(VarietySpec{AmbientSpec(3, {0, 0, 0, 0})}) == 3);
    CHECK(dimension(VarietySpec{cubic_threefold({0, 0, 0, 0, 0})}) == 3);
    CHECK(dimension(VarietySpec{PolytopeSpec(2, {{0, 0}, {1, 0}, {0, 1}}, {1, 1})}) == 2);
}
