#include "futaki/futaki.hpp"

#include <algorithm>
#include <string>

#include "futaki/errors.hpp"
#include "futaki/interpolation.hpp"

namespace futaki {

FutakiResult futaki_from_samples(const std::vector<CharacterSample>& samples, int n,
                                 int extra_depth) {
    if (n < 1)
        throw invalid_input("variety dimension n must be >= 1");
    if (samples.size() < static_cast<std::size_t>(n) + 3)
        throw invalid_input("need at least n+3 character samples, got "
                            + std::to_string(samples.size()));
    const int deeper = extra_depth < 0 ? n : extra_depth;

    std::vector<std::pair<long, Rational>> chi_samples, weight_samples;
    chi_samples.reserve(samples.size());
    weight_samples.reserve(samples.size());
    for (const auto& s : samples) {
        chi_samples.emplace_back(s.k, s.chi);
        weight_samples.emplace_back(s.k, s.weight);
    }

    FutakiResult out;
    out.chi_poly = interpolate(chi_samples, n);
    out.weight_poly = interpolate(weight_samples, n + 1);
    if (out.chi_poly.is_zero())
        throw invalid_input("chi samples are identically zero");
    if (out.weight_poly.degree() - out.chi_poly.degree() > 1)
        throw degree_overflow("weight grows faster than k * chi; inconsistent character data");

    const long e0 = static_cast<long>(out.weight_poly.degree())
                    - static_cast<long>(out.chi_poly.degree());
    const int depth = static_cast<int>(std::max(0L, e0 + deeper));
    const AsymptoticExpansion exp = ratio_expansion(out.weight_poly, out.chi_poly, depth);
    out.F0 = exp.coefficient_at(1);
    out.F1 = exp.coefficient_at(0);
    out.deeper_terms.reserve(static_cast<std::size_t>(deeper));
    for (int j = 1; j <= deeper; ++j)
        out.deeper_terms.push_back(exp.coefficient_at(-j));

    auto [mn, mx] = std::minmax_element(samples.begin(), samples.end(),
                                        [](const auto& a, const auto& b) { return a.k < b.k; });
    out.k_min = mn->k;
    out.k_max = mx->k;
    return out;
}

FutakiResult futaki(const VarietySpec& spec, int n, int extra_depth) {
    if (n < 1)
        throw invalid_input("variety dimension n must be >= 1");
    std::vector<CharacterSample> samples;
    samples.reserve(static_cast<std::size_t>(n) + 4);
    for (long k = 1; k <= n + 4; ++k)
        samples.push_back(character(spec, k));
    return futaki_from_samples(samples, n, extra_depth);
}

} // namespace futaki
