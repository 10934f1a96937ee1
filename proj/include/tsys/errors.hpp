#pragma once

#include <stdexcept>
#include <string>

namespace tsys {

/// Requested series coefficient lies beyond the truncation order.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact left division failed: the numerator is not left-divisible by the
/// denominator (iteration cap hit or a coefficient quotient was inexact).
struct DivisionError : std::runtime_error {
    explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

/// A reduced boundary argument fell outside every case window.
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

/// Two applicable cases of the piecewise lattice assignment disagree.
struct OverlapError : std::runtime_error {
    explicit OverlapError(const std::string& what) : std::runtime_error(what) {}
};

/// A monomial expected to be dominant has a negative exponent.
struct DominanceError : std::runtime_error {
    explicit DominanceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsys
