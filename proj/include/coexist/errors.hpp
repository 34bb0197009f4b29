#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coexist {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the unit square / unit interval.
struct DomainError : Error {
    using Error::Error;
};

// Quadrature rule incompatible with the grid (e.g. Simpson with even n).
struct BadRule : Error {
    using Error::Error;
};

// Nonlinearity evaluated to a negative or non-finite value.
struct EvalError : Error {
    using Error::Error;
};

// t -> ||x + t h|| failed to increase along the bracket; the cone does not
// preserve the order relation under the norm.
struct NonMonotoneNorm : Error {
    using Error::Error;
};

// Retraction denominator collapsed; signals an invalid direction h.
struct DegenerateDirection : Error {
    using Error::Error;
};

// Iterative eigenvalue estimation did not converge.
struct NoConvergence : Error {
    using Error::Error;
};

// Resolvent shift too close to the spectral radius.
struct NearSingular : Error {
    using Error::Error;
};

// Requested epsilon does not fit inside the eigenvalue-criterion margins.
struct NoMargin : Error {
    using Error::Error;
};

// Multiplicity boxes violate the nesting/disjointness requirements.
struct BadNesting : Error {
    using Error::Error;
};

// Configuration file or field failed to parse or validate.
struct ConfigError : Error {
    using Error::Error;
};

// Expression text failed to parse; position is a 0-based byte offset.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
    std::size_t position;
};

// Identifier outside {t, x, y} and the builtin function table.
struct UnknownIdentifier : Error {
    UnknownIdentifier(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
    std::size_t position;
};

// Evaluation hit sqrt/log of an invalid argument, division by ~0, or a
// non-finite intermediate.
struct DomainFault : Error {
    using Error::Error;
};

}  // namespace coexist
