#pragma once

#include <vector>

#include "futaki/polynomial.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// One term  coefficient * k^exponent  of an asymptotic expansion.
struct ExpansionTerm {
    long exponent;
    Rational coefficient;

    friend bool operator==(const ExpansionTerm& a, const ExpansionTerm& b) {
        return a.exponent == b.exponent && a.coefficient == b.coefficient;
    }
};

/// Finitely truncated expansion  sum_j c_j * k^{e_j}  as k -> infinity,
/// with strictly decreasing exponents.  Zero coefficients are stored only
/// for terms explicitly of interest (a vanishing term is itself a result);
/// truncation_order is the smallest exponent about which the expansion
/// makes a claim.
class AsymptoticExpansion {
public:
    AsymptoticExpansion(std::vector<ExpansionTerm> terms, long truncation_order);

    const std::vector<ExpansionTerm>& terms() const { return terms_; }
    long truncation_order() const { return truncation_order_; }

    /// Coefficient of k^e.  Exponents above the leading stored term are
    /// exactly zero; asking below truncation_order throws invalid_input
    /// (the expansion was not computed to that order).
    Rational coefficient_at(long e) const;

private:
    std::vector<ExpansionTerm> terms_; // exponents strictly decreasing
    long truncation_order_;
};

/// Expansion of p(k)/q(k) in descending powers of k with exact
/// coefficients: exactly depth+1 consecutive terms starting at the leading
/// exponent deg p - deg q (with deg 0 = -1), zeros included.
///
/// Throws invalid_input when q is identically zero or depth < 0.
AsymptoticExpansion ratio_expansion(const Polynomial& p, const Polynomial& q, int depth);

} // namespace futaki
