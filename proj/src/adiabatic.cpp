#include "futaki/adiabatic.hpp"

#include <set>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

Rational point_power(const Rational& base, int exponent) {
    return pow(base, static_cast<unsigned>(exponent));
}

void require_laplacians(const ResolutionData& data, const char* where) {
    for (const auto& p : data.points) {
        if (!p.delta_u_p.has_value()) {
            throw incomplete_input(std::string(where) + ": point '" + p.label +
                                   "' is missing delta_u_p");
        }
    }
}

} // namespace

void ResolutionData::validate() const {
    if (n < 2) {
        throw invalid_input("resolution data: dimension n must be at least 2");
    }
    if (!(Ln > Rational(0))) {
        throw invalid_input("resolution data: L^n must be positive");
    }
    if (points.empty()) {
        throw invalid_input("resolution data: at least one singular point is required");
    }
    std::set<std::string> labels;
    for (const auto& p : points) {
        if (p.label.empty()) {
            throw invalid_input("resolution data: point labels must be nonempty");
        }
        if (!labels.insert(p.label).second) {
            throw invalid_input("resolution data: duplicate point label '" + p.label + "'");
        }
        if (!(p.b_p > Rational(0))) {
            throw invalid_input("resolution data: b_p must be positive at point '" +
                                p.label + "'");
        }
    }
}

AsymptoticExpansion expansion_from_abcd(const CoefficientFamily& fam, int n) {
    if (n < 2) {
        throw invalid_input("expansion_from_abcd: dimension n must be at least 2");
    }
    if (fam.c0.is_zero()) {
        throw invalid_input("expansion_from_abcd: leading volume coefficient c0 is zero");
    }
    const Rational c0sq = fam.c0 * fam.c0;
    const Rational term0 = fam.b0 / fam.c0 - fam.a0 * fam.d0 / c0sq;
    const Rational term_corr =
        fam.b_nm1 / fam.c0 - fam.a0 * fam.d_nm1 / c0sq;
    const Rational term_deep = fam.b_n / fam.c0 +
                               (fam.d0 / fam.c0) * (fam.a0 * fam.c_n - fam.c0 * fam.a_n) / c0sq -
                               (fam.c_n / fam.c0) * term0;
    std::vector<ExpansionTerm> terms;
    terms.push_back({0, term0});
    terms.push_back({1 - static_cast<long>(n), term_corr});
    terms.push_back({-static_cast<long>(n), term_deep});
    return AsymptoticExpansion(std::move(terms), -static_cast<long>(n));
}

CoefficientFamily build_coefficients(const ResolutionData& data, const MetricInputs& metric) {
    data.validate();
    require_laplacians(data, "build_coefficients");

    const int n = data.n;
    const Rational n_fact = factorial(static_cast<unsigned>(n));
    const Rational corr_denom = Rational(2) * factorial(static_cast<unsigned>(n - 1));

    CoefficientFamily fam;
    fam.a0 = metric.a0;
    fam.b0 = metric.b0;
    fam.d0 = metric.d0;
    fam.c0 = data.Ln / n_fact;

    for (const auto& p : data.points) {
        const Rational bn = point_power(p.b_p, n);
        const Rational bn_minus = point_power(p.b_p, n - 1);
        const Rational R_p = -p.KM_Ep_nminus1;

        fam.c_n += bn * p.Ep_n / n_fact;
        fam.a_n += bn * p.u_p * p.Ep_n / n_fact;
        fam.b_nm1 += p.u_p * bn_minus * R_p / corr_denom;
        fam.d_nm1 += bn_minus * R_p / corr_denom;
        fam.b_n += Rational(-1, 2) * (*p.delta_u_p) * bn * p.Ep_n / n_fact;

        auto it = metric.up_integrals.find(p.label);
        if (it != metric.up_integrals.end()) {
            fam.a_n1 += point_power(p.b_p, n + 1) * it->second;
        }
    }
    return fam;
}

AsymptoticExpansion theorem_expansion(const ResolutionData& data) {
    data.validate();
    require_laplacians(data, "theorem_expansion");
    if (!data.KX_Lnminus1.has_value()) {
        throw incomplete_input("theorem_expansion: K_X . L^{n-1} is required for the r^-n term");
    }

    const int n = data.n;
    const Rational half_n(n, 2);
    const Rational s_bar = -half_n * (*data.KX_Lnminus1) / data.Ln;

    Rational term_corr;
    Rational term_deep;
    for (const auto& p : data.points) {
        const Rational R_p = -p.KM_Ep_nminus1;
        term_corr += (p.u_p - data.u_bar) * point_power(p.b_p, n - 1) * R_p;
        const Rational bracket =
            s_bar * (p.u_p - data.u_bar) + (*p.delta_u_p) + Rational(2) * data.FXL;
        term_deep += bracket * point_power(p.b_p, n) * p.Ep_n;
    }
    term_corr = half_n * term_corr / data.Ln;
    term_deep = Rational(-1, 2) * term_deep / data.Ln;

    std::vector<ExpansionTerm> terms;
    terms.push_back({0, data.FXL});
    terms.push_back({1 - static_cast<long>(n), term_corr});
    terms.push_back({-static_cast<long>(n), term_deep});
    return AsymptoticExpansion(std::move(terms), -static_cast<long>(n));
}

Rational corollary_leading(const ResolutionData& data) {
    data.validate();
    Rational sum;
    for (const auto& p : data.points) {
        sum += (p.u_p - data.u_bar) * point_power(p.b_p, data.n - 1) * p.KM_Ep_nminus1;
    }
    return Rational(-data.n, 2) * sum / data.Ln;
}

AsymptoticExpansion resolution_expansion(const ResolutionData& data, int depth) {
    data.validate();
    if (depth < 0) {
        throw invalid_input("resolution_expansion: depth must be nonnegative");
    }
    if (depth > data.n) {
        throw invalid_input(
            "resolution_expansion: expansion is only established through order r^-n");
    }
    if (depth == data.n) {
        return theorem_expansion(data);
    }

    std::vector<ExpansionTerm> terms;
    terms.push_back({0, data.FXL});
    if (depth >= data.n - 1) {
        terms.push_back({1 - static_cast<long>(data.n), corollary_leading(data)});
    }
    return AsymptoticExpansion(std::move(terms), -static_cast<long>(depth));
}

} // namespace futaki
