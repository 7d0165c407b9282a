#include "doctest.h"

#include "futaki/errors.hpp"
#include "futaki/expansion.hpp"

#include <vector>

using futaki::AsymptoticExpansion;
using futaki::ExpansionTerm;
using futaki::Polynomial;
using futaki::Rational;
using futaki::ratio_expansion;

namespace {
Polynomial poly(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }
}  // namespace

TEST_CASE("zero numerator produces explicit zero terms") {
    // deg 0 = -1 by convention, so the leading exponent is -1 - deg q = -2.
    const auto e = ratio_expansion(Polynomial(), poly({Rational(1), Rational(1)}), 1);
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0].exponent == -2);
    CHECK(e.terms()[0].coefficient == Rational(0));
    CHECK(e.terms()[1].exponent == -3);
    CHECK(e.terms()[1].coefficient == Rational(0));
    CHECK(e.truncation_order() == -3);
}

TEST_CASE("exact division k^2 / k") {
    const auto e = ratio_expansion(poly({Rational(0), Rational(0), Rational(1)}),
                                   poly({Rational(0), Rational(1)}), 1);
    REQUIRE(e.terms().size() == 2);
    CHECK(e.coefficient_at(1) == Rational(1));
    CHECK(e.coefficient_at(0) == Rational(0));
}

TEST_CASE("long division tail (k^2+1)/(k+1)") {
    const auto e = ratio_expansion(poly({Rational(1), Rational(0), Rational(1)}),
                                   poly({Rational(1), Rational(1)}), 2);
    CHECK(e.coefficient_at(1) == Rational(1));
    CHECK(e.coefficient_at(0) == Rational(-1));
    CHECK(e.coefficient_at(-1) == Rational(2));
    CHECK(e.truncation_order() == -1);
}

TEST_CASE("coefficient_at above the leading term is zero, below truncation throws") {
    const auto e = ratio_expansion(poly({Rational(1), Rational(0), Rational(1)}),
                                   poly({Rational(1), Rational(1)}), 2);
    CHECK(e.coefficient_at(5) == Rational(0));
    CHECK_THROWS_AS(e.coefficient_at(-2), futaki::invalid_input);
}

TEST_CASE("common polynomial factors do not change the expansion") {
    const Polynomial p = poly({Rational(1), Rational(0), Rational(1)});
    const Polynomial q = poly({Rational(1), Rational(1)});
    const Polynomial f = poly({Rational(-3), Rational(2), Rational(1)});
    const auto plain = ratio_expansion(p, q, 3);
    const auto scaled = ratio_expansion(p * f, q * f, 3);
    for (long exponent = 1; exponent >= -2; --exponent) {
        CHECK(plain.coefficient_at(exponent) == scaled.coefficient_at(exponent));
    }
    // A scalar common factor likewise cancels.
    const auto halved = ratio_expansion(Rational(1, 2) * p, Rational(1, 2) * q, 3);
    for (long exponent = 1; exponent >= -2; --exponent) {
        CHECK(plain.coefficient_at(exponent) == halved.coefficient_at(exponent));
    }
}

TEST_CASE("reconstruction leaves only a low-degree remainder") {
    const Polynomial p = poly({Rational(2), Rational(-1), Rational(5), Rational(1)});
    const Polynomial q = poly({Rational(1), Rational(3)});
    const int depth = 3;
    const auto e = ratio_expansion(p, q, depth);
    const long e0 = p.degree() - q.degree();  // 2
    const int lift = static_cast<int>(depth - e0);  // make all exponents nonneg

    Polynomial partial;
    for (const auto& term : e.terms()) {
        partial = partial + Polynomial::monomial(static_cast<int>(term.exponent + lift),
                                                 term.coefficient);
    }
    const Polynomial remainder = p.shifted_up(lift) - partial * q;
    // deg remainder < deg q + lift + (e0 - depth) = 1 + 1 - 1 = 1.
    CHECK(remainder.degree() < q.degree() + lift + static_cast<int>(e0) - depth);
}

TEST_CASE("denominator validation") {
    CHECK_THROWS_AS(ratio_expansion(poly({Rational(1)}), Polynomial(), 1),
                    futaki::invalid_input);
    CHECK_THROWS_AS(ratio_expansion(poly({Rational(1)}), poly({Rational(1)}), -1),
                    futaki::invalid_input);
}

TEST_CASE("expansion construction validates term ordering") {
    CHECK_NOTHROW(AsymptoticExpansion(
        {ExpansionTerm{1, Rational(1)}, ExpansionTerm{0, Rational(2)}}, 0));
    // Increasing exponents are rejected.
    CHECK_THROWS_AS(AsymptoticExpansion(
                        {ExpansionTerm{0, Rational(1)}, ExpansionTerm{1, Rational(1)}}, 0),
                    futaki::invalid_input);
    // A term below the declared truncation order is rejected.
    CHECK_THROWS_AS(AsymptoticExpansion({ExpansionTerm{-2, Rational(1)}}, -1),
                    futaki::invalid_input);
}
