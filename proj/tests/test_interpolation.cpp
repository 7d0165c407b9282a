#include "doctest.h"

#include "futaki/errors.hpp"
#include "futaki/interpolation.hpp"

#include <utility>
#include <vector>

using futaki::interpolate;
using futaki::Polynomial;
using futaki::Rational;

namespace {
using Samples = std::vector<std::pair<long, Rational>>;
}  // namespace

TEST_CASE("line recovered with a verifying surplus sample") {
    const Samples samples = {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}};
    const Polynomial p = interpolate(samples, 1);
    CHECK(p == Polynomial({Rational(1), Rational(1)}));  // k + 1
}

TEST_CASE("squares recovered exactly") {
    const Samples samples = {{1, Rational(1)}, {2, Rational(4)}, {3, Rational(9)}};
    const Polynomial p = interpolate(samples, 2);
    CHECK(p == Polynomial({Rational(0), Rational(0), Rational(1)}));  // k^2
}

TEST_CASE("cubic section count of a threefold") {
    const Samples samples = {
        {1, Rational(5)}, {2, Rational(15)}, {3, Rational(34)}, {4, Rational(65)}};
    const Polynomial p = interpolate(samples, 3);
    CHECK(p == Polynomial({Rational(1), Rational(2), Rational(3, 2), Rational(1, 2)}));
    // Extrapolation cross-check: (k+1)(k^2+2k+2)/2 at k = 5.
    CHECK(p.evaluate(5) == Rational(111));
}

TEST_CASE("duplicate abscissae are rejected") {
    const Samples samples = {{1, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}};
    CHECK_THROWS_AS(interpolate(samples, 1), futaki::invalid_input);
}

TEST_CASE("too few samples are rejected") {
    CHECK_THROWS_AS(interpolate(Samples{{1, Rational(1)}}, 1), futaki::invalid_input);
    CHECK_THROWS_AS(interpolate(Samples{}, 0), futaki::invalid_input);
    CHECK_THROWS_AS(interpolate(Samples{{0, Rational(1)}, {1, Rational(2)}}, -1),
                    futaki::invalid_input);
}

TEST_CASE("off-curve surplus sample raises degree_overflow") {
    const Samples samples = {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(4)}};
    CHECK_THROWS_AS(interpolate(samples, 1), futaki::degree_overflow);
}

TEST_CASE("every sample is reproduced on evaluation") {
    const Polynomial truth({Rational(3, 7), Rational(-2, 5), Rational(1, 3)});
    Samples samples;
    for (long k = -2; k <= 4; ++k) {
        samples.emplace_back(k, truth.evaluate(k));
    }
    const Polynomial p = interpolate(samples, 2);
    CHECK(p == truth);
    for (const auto& [k, value] : samples) {
        CHECK(p.evaluate(k) == value);
    }
}

TEST_CASE("surplus consistent samples are harmless") {
    // Degree bound larger than the true degree, plenty of samples.
    const Polynomial truth({Rational(-1), Rational(0), Rational(2)});
    Samples samples;
    for (long k = 0; k <= 9; ++k) {
        samples.emplace_back(k, truth.evaluate(k));
    }
    CHECK(interpolate(samples, 5) == truth);
}
