#include "futaki/interpolation.hpp"

#include <set>
#include <string>

#include "futaki/errors.hpp"

namespace futaki {

Polynomial interpolate(const std::vector<std::pair<long, Rational>>& samples, int max_degree) {
    if (max_degree < 0)
        throw invalid_input("interpolation max_degree must be nonnegative");
    const std::size_t need = static_cast<std::size_t>(max_degree) + 1;
    if (samples.size() < need)
        throw invalid_input("interpolation needs at least max_degree+1 samples, got "
                            + std::to_string(samples.size()));

    std::set<long> seen;
    for (const auto& [x, v] : samples) {
        (void)v;
        if (!seen.insert(x).second)
            throw invalid_input("duplicate interpolation abscissa " + std::to_string(x));
    }

    // Divided-difference coefficients over all samples.  The coefficient of
    // order j is determined by the first j+1 points, so orders <= max_degree
    // reproduce the interpolant of the leading block and any nonzero order
    // beyond max_degree certifies an off-curve surplus sample.
    const std::size_t N = samples.size();
    std::vector<Rational> dd(N);
    for (std::size_t i = 0; i < N; ++i)
        dd[i] = samples[i].second;
    for (std::size_t j = 1; j < N; ++j)
        for (std::size_t i = N - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1])
                    / Rational(samples[i].first - samples[i - j].first);

    for (std::size_t j = need; j < N; ++j)
        if (!dd[j].is_zero())
            throw degree_overflow("samples are not polynomial of degree <= "
                                  + std::to_string(max_degree));

    // Expand the Newton form  sum_j dd[j] * prod_{i<j} (x - x_i).
    Polynomial result;
    Polynomial basis(std::vector<Rational>{Rational(1)});
    for (std::size_t j = 0; j < need; ++j) {
        result = result + dd[j] * basis;
        basis = basis * Polynomial(std::vector<Rational>{Rational(-samples[j].first), Rational(1)});
    }
    return result;
}

} // namespace futaki
