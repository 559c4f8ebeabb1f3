#pragma once

#include <stdexcept>
#include <string>

namespace qat {

/// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// u2(t') reached (or got numerically too close to) a zero. The time map
/// u1/u2 and the grid dilation 1/u2 diverge there.
struct CausticError : Error {
    using Error::Error;
};

/// Requested time lies outside the image of the validity interval.
struct RangeError : Error {
    using Error::Error;
};

/// The grid cannot hold the requested state (captured norm too low).
struct TruncationError : Error {
    using Error::Error;
};

/// Spectral tail check failed: the state is not band-limited on its grid.
struct AliasingError : Error {
    using Error::Error;
};

/// Spec asks for something the configured solver cannot produce.
struct UnsupportedSpecError : Error {
    using Error::Error;
};

/// Polynomial / expansion order beyond the supported range.
struct UnsupportedOrderError : Error {
    using Error::Error;
};

struct GridMismatchError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

/// Diagnostic not meaningful for this state (e.g. squeezing of a
/// non-Gaussian state).
struct NotApplicableError : Error {
    using Error::Error;
};

/// Probability density reached the edge of the simulation box.
struct BoundaryEscapeError : Error {
    using Error::Error;
};

/// Self-check (step-halving comparison) failed.
struct AccuracyError : Error {
    using Error::Error;
};

/// Input file / configuration could not be parsed or validated.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qat
