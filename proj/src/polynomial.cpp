#include "futaki/polynomial.hpp"

#include <algorithm>

#include "futaki/errors.hpp"

namespace futaki {

namespace {
const Rational kZero{};
} // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    if (degree < 0)
        throw invalid_input("monomial degree must be nonnegative");
    if (c.is_zero())
        return Polynomial();
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Polynomial(std::move(cs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

const Rational& Polynomial::coefficient(int i) const {
    if (i < 0)
        throw invalid_input("polynomial coefficient index must be nonnegative");
    if (static_cast<std::size_t>(i) >= coeffs_.size())
        return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::scale_argument(const Rational& m) const {
    std::vector<Rational> cs(coeffs_.size());
    Rational mp(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        cs[i] = coeffs_[i] * mp;
        mp *= m;
    }
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::shifted_up(int e) const {
    if (e < 0)
        throw invalid_input("shift exponent must be nonnegative");
    if (is_zero())
        return Polynomial();
    std::vector<Rational> cs(static_cast<std::size_t>(e), Rational());
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        cs[i] = -coeffs_[i];
    return Polynomial(std::move(cs));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i < a.coeffs_.size())
            cs[i] += a.coeffs_[i];
        if (i < b.coeffs_.size())
            cs[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(cs));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(cs));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> cs(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        cs[i] = c * p.coeffs_[i];
    return Polynomial(std::move(cs));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero())
        throw invalid_input("polynomial division by zero");
    Polynomial quotient;
    Polynomial remainder = p;
    const Rational& lead = q.coeffs_.back();
    while (!remainder.is_zero() && remainder.degree() >= q.degree()) {
        const int shift = remainder.degree() - q.degree();
        const Rational factor = remainder.coeffs_.back() / lead;
        quotient = quotient + Polynomial::monomial(shift, factor);
        remainder = remainder - (factor * q.shifted_up(shift));
    }
    return {quotient, remainder};
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.to_string());
    return out;
}

} // namespace futaki
