#pragma once

#include <utility>
#include <vector>

#include "futaki/polynomial.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// Exact interpolation by Newton divided differences.
///
/// Returns the unique polynomial of degree <= max_degree through the first
/// max_degree+1 samples.  Every further sample is a consistency witness:
/// its divided difference must vanish, otherwise the data is not polynomial
/// of the promised degree and degree_overflow is thrown.
///
/// Throws invalid_input on duplicate abscissae or when fewer than
/// max_degree+1 samples are supplied.
Polynomial interpolate(const std::vector<std::pair<long, Rational>>& samples, int max_degree);

} // namespace futaki
