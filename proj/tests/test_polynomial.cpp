#include "doctest.h"

#include "futaki/errors.hpp"
#include "futaki/polynomial.hpp"

#include <vector>

using futaki::Polynomial;
using futaki::Rational;

TEST_CASE("construction trims trailing zeros and reports degree") {
    const Polynomial zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.is_zero());
    CHECK(zero.coefficient(0) == Rational(0));
    CHECK(zero.coefficient(10) == Rational(0));

    const Polynomial constant({Rational(1), Rational(0), Rational(0)});
    CHECK(constant.degree() == 0);
    CHECK(constant == Polynomial({Rational(1)}));

    const Polynomial linear({Rational(0), Rational(2)});
    CHECK(linear.degree() == 1);
    CHECK(linear.coefficient(0) == Rational(0));
    CHECK(linear.coefficient(1) == Rational(2));
    CHECK(linear.coefficient(5) == Rational(0));
    CHECK_THROWS_AS(linear.coefficient(-1), futaki::invalid_input);

    CHECK(Polynomial(std::vector<Rational>{}).is_zero());
    CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("monomial constructor") {
    const Polynomial cubed = Polynomial::monomial(3, Rational(2));
    CHECK(cubed.degree() == 3);
    CHECK(cubed.coefficient(3) == Rational(2));
    CHECK(cubed.coefficient(2) == Rational(0));
    CHECK(Polynomial::monomial(2, Rational(0)).is_zero());
    CHECK_THROWS_AS(Polynomial::monomial(-1, Rational(1)), futaki::invalid_input);
}

TEST_CASE("ring arithmetic") {
    const Polynomial p({Rational(1), Rational(1)});   // 1 + x
    const Polynomial q({Rational(-1), Rational(1)});  // -1 + x

    CHECK(p * q == Polynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK(p + q == Polynomial({Rational(0), Rational(2)}));
    CHECK(p - p == Polynomial());
    CHECK(-p == Polynomial({Rational(-1), Rational(-1)}));
    CHECK(Rational(3) * p == Polynomial({Rational(3), Rational(3)}));
    CHECK(Rational(0) * p == Polynomial());
    CHECK(p * Polynomial() == Polynomial());
    CHECK(p != q);
}

TEST_CASE("evaluation") {
    const Polynomial p({Rational(1), Rational(2), Rational(3)});  // 1 + 2x + 3x^2
    CHECK(p.evaluate(Rational(0)) == Rational(1));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(11, 4));
    CHECK(p.evaluate(-2) == Rational(9));
    CHECK(Polynomial().evaluate(Rational(5)) == Rational(0));
}

TEST_CASE("argument scaling and upward shifts") {
    const Polynomial p({Rational(1), Rational(2), Rational(3)});
    CHECK(p.scale_argument(Rational(2)) ==
          Polynomial({Rational(1), Rational(4), Rational(12)}));
    CHECK(p.scale_argument(Rational(1, 2)) ==
          Polynomial({Rational(1), Rational(1), Rational(3, 4)}));
    CHECK(p.scale_argument(Rational(0)) == Polynomial({Rational(1)}));

    CHECK(p.shifted_up(2) == Polynomial({Rational(0), Rational(0), Rational(1),
                                         Rational(2), Rational(3)}));
    CHECK(p.shifted_up(0) == p);
    CHECK_THROWS_AS(p.shifted_up(-1), futaki::invalid_input);
}

TEST_CASE("euclidean division") {
    const Polynomial p({Rational(1), Rational(0), Rational(1)});  // 1 + x^2
    const Polynomial q({Rational(1), Rational(1)});               // 1 + x
    const auto [quot, rem] = Polynomial::divmod(p, q);
    CHECK(quot == Polynomial({Rational(-1), Rational(1)}));
    CHECK(rem == Polynomial({Rational(2)}));
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());

    // Dividing by a higher-degree polynomial leaves everything in the remainder.
    const auto [q2, r2] = Polynomial::divmod(q, p);
    CHECK(q2.is_zero());
    CHECK(r2 == q);

    CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), futaki::invalid_input);
}

TEST_CASE("division round trip with fractional coefficients") {
    const Polynomial p({Rational(3, 7), Rational(-2), Rational(0), Rational(5, 2)});
    const Polynomial q({Rational(-1, 3), Rational(2)});
    const auto [quot, rem] = Polynomial::divmod(p, q);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());
}

TEST_CASE("coefficient strings") {
    const Polynomial p({Rational(0), Rational(7, 6), Rational(9, 2), Rational(13, 3)});
    const std::vector<std::string> expected = {"0", "7/6", "9/2", "13/3"};
    CHECK(p.to_strings() == expected);
    CHECK(Polynomial().to_strings().empty());
}
