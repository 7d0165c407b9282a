#include "futaki/expansion.hpp"

#include <algorithm>
#include <string>

#include "futaki/errors.hpp"

namespace futaki {

AsymptoticExpansion::AsymptoticExpansion(std::vector<ExpansionTerm> terms, long truncation_order)
    : terms_(std::move(terms)), truncation_order_(truncation_order) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent)
            throw invalid_input("expansion exponents must be strictly decreasing");
        if (terms_[i].exponent < truncation_order_)
            throw invalid_input("expansion term below its truncation order");
    }
}

Rational AsymptoticExpansion::coefficient_at(long e) const {
    if (e < truncation_order_)
        throw invalid_input("expansion not computed to order k^" + std::to_string(e));
    for (const auto& t : terms_) {
        if (t.exponent == e)
            return t.coefficient;
        if (t.exponent < e)
            break;
    }
    return Rational(0);
}

AsymptoticExpansion ratio_expansion(const Polynomial& p, const Polynomial& q, int depth) {
    if (q.is_zero())
        throw invalid_input("ratio expansion requires a nonzero denominator");
    if (depth < 0)
        throw invalid_input("ratio expansion depth must be nonnegative");

    // Leading exponent (deg 0 = -1 keeps the zero numerator consistent).
    const long e0 = static_cast<long>(p.degree()) - static_cast<long>(q.degree());

    // Long division of p * k^M by q exposes the coefficients of k^e for
    // every e >= -M, since the remainder contributes only O(k^{-M-1}).
    const long M = std::max(0L, static_cast<long>(depth) - e0);
    const Polynomial quotient =
        Polynomial::divmod(p.shifted_up(static_cast<int>(M)), q).first;

    std::vector<ExpansionTerm> terms;
    terms.reserve(static_cast<std::size_t>(depth) + 1);
    for (long e = e0; e >= e0 - depth; --e)
        terms.push_back({e, quotient.coefficient(static_cast<int>(M + e))});
    return AsymptoticExpansion(std::move(terms), e0 - depth);
}

} // namespace futaki
