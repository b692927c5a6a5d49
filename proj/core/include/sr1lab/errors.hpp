#pragma once

#include <stdexcept>
#include <string>

namespace sr1lab {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// A Cholesky pivot was <= 0: the matrix is not numerically SPD.
struct NotPositiveDefinite : Error {
    using Error::Error;
};

/// Quadratic form came out negative beyond tolerance for a weight
/// matrix that was supposed to be PSD.
struct IndefiniteWeight : Error {
    using Error::Error;
};

/// A measure that requires G >= A was asked for a pair that violates
/// the ordering.
struct OrderViolated : Error {
    using Error::Error;
};

struct DegenerateDirection : Error {
    using Error::Error;
};

struct ZeroDirection : Error {
    using Error::Error;
};

struct NegativeArgument : Error {
    using Error::Error;
};

struct InvalidFactor : Error {
    using Error::Error;
};

struct NonconvexConfiguration : Error {
    using Error::Error;
};

struct MissingConstants : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

struct SinkFailure : Error {
    using Error::Error;
};

/// Parse errors carry the 1-based line number of the offending input line.
struct ParseError : Error {
    int line_no;
    ParseError(const std::string& what, int line) : Error(what), line_no(line) {}
};

struct MalformedLine : ParseError {
    using ParseError::ParseError;
};

struct NonBinaryLabel : ParseError {
    using ParseError::ParseError;
};

struct NonAscendingIndex : ParseError {
    using ParseError::ParseError;
};

}  // namespace sr1lab
