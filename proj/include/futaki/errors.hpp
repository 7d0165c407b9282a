#pragma once

#include <stdexcept>
#include <string>

namespace futaki {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller-supplied data (bad rational string,
/// duplicate interpolation abscissae, degenerate polytope, weight vector
/// violating a model constraint, division by zero, ...).
class invalid_input : public error {
public:
    using error::error;
};

/// A required optional field is missing for the requested computation
/// (e.g. delta_u_p when the r^{-n} term is asked for).
class incomplete_input : public error {
public:
    using error::error;
};

/// Sample data is not polynomial of the promised degree: an interpolation
/// surplus point falls off the curve, or character data grows too fast.
class degree_overflow : public error {
public:
    using error::error;
};

/// An enumeration would exceed the configured work cap.
class resource_limit : public error {
public:
    using error::error;
};

} // namespace futaki
