#pragma once

#include <string>
#include <utility>
#include <vector>

#include "futaki/rational.hpp"

namespace futaki {

/// Univariate polynomial with exact rational coefficients, stored lowest
/// degree first.  The zero polynomial has degree -1 and an empty
/// coefficient list; otherwise the stored leading coefficient is nonzero.
class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() = default;

    /// From coefficients, lowest degree first; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Rational> coefficients);

    /// c * x^degree (degree >= 0); the zero polynomial when c == 0.
    static Polynomial monomial(int degree, const Rational& c);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero beyond the stored degree (i may exceed it).
    const Rational& coefficient(int i) const;

    /// All stored coefficients, lowest degree first (empty for zero).
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Exact evaluation (Horner).
    Rational evaluate(const Rational& x) const;
    Rational evaluate(long x) const { return evaluate(Rational(x)); }

    /// p(m * x): substitutes a scaled argument.
    Polynomial scale_argument(const Rational& m) const;

    /// p(x) * x^e for e >= 0.
    Polynomial shifted_up(int e) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    /// Euclidean division: p = q * quotient + remainder with
    /// deg remainder < deg q.  Throws invalid_input when q is zero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);

    /// Serialized coefficients, lowest degree first ("p/q" strings).
    std::vector<std::string> to_strings() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace futaki
