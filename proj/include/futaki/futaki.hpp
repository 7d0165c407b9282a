#pragma once

#include <vector>

#include "futaki/characters.hpp"
#include "futaki/expansion.hpp"
#include "futaki/polynomial.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// The invariant and its companions, extracted from the exact expansion
///   weight(k) / chi(k) = F0 * k + F1 + O(1/k)   as k -> infinity.
/// F1 is the Futaki invariant; deeper_terms hold the coefficients at
/// k^{-1}, k^{-2}, ... when requested.
struct FutakiResult {
    Rational F0;
    Rational F1;
    std::vector<Rational> deeper_terms;
    Polynomial chi_poly;
    Polynomial weight_poly;
    long k_min = 0;
    long k_max = 0;
};

/// Interpolates chi (degree <= n) and weight (degree <= n+1) through the
/// samples, verifying every surplus sample, and expands weight/chi.
///
/// Requires at least n+3 samples at distinct k.  extra_depth asks for that
/// many terms below k^0 (default -1 means n).  Interpolation failures
/// surface as degree_overflow: the samples are not polynomial of the
/// promised degree (wrong n, or k below the polynomial range).
FutakiResult futaki_from_samples(const std::vector<CharacterSample>& samples, int n,
                                 int extra_depth = -1);

/// Gathers character samples at k = 1..n+4 from the given VarietySpec and
/// delegates to futaki_from_samples.  n must be the dimension of the
/// polarized variety described (d for ambient, d-1 for hypersurfaces, n
/// for polytopes).
FutakiResult futaki(const VarietySpec& spec, int n, int extra_depth = -1);

} // namespace futaki
