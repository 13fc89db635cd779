#pragma once

#include <stdexcept>
#include <string>

namespace baut {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad dimensions, non-unimodular
/// transform, indefinite form where a definite one is required, ...).
class invalid_input : public error {
public:
    using error::error;
};

/// A matrix that was required to be invertible over Q has determinant zero.
/// Upstream this signals a degenerate quadratic form.
class singular_matrix : public invalid_input {
public:
    using invalid_input::invalid_input;
};

/// A search exceeded its configured time budget. Distinct from any
/// mathematical outcome.
class timeout_error : public error {
public:
    using error::error;
};

} // namespace baut
