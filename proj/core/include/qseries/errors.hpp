#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qseries {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reciprocal requested of a series whose constant term is not +1 or -1.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// Coefficient index outside the exact range of a truncated series.
struct OutOfRange : Error {
    using Error::Error;
};

// named() called with a symbol it does not know.
struct UnknownName : Error {
    using Error::Error;
};

// Lattice generators are linearly dependent.
struct DegenerateLattice : Error {
    using Error::Error;
};

// A quadratic form is not constant mod m on some coset.
struct NonConstantResidue : Error {
    using Error::Error;
};

// An affine substitution produced a mixed mu*nu term.
struct CrossTermPresent : Error {
    using Error::Error;
};

// Bilateral sum over a form that does not grow in both variables.
struct NotBoundedBelow : Error {
    using Error::Error;
};

// Exhaustive partition enumeration requested beyond its cap.
struct CapExceeded : Error {
    using Error::Error;
};

// verify() called with an unregistered identity id.
struct UnknownIdentity : Error {
    using Error::Error;
};

// Division by a series whose constant term is not +1 or -1.
struct NonUnitDivision : Error {
    using Error::Error;
};

// Dissection component index outside [0, modulus).
struct DissectionIndexOutOfRange : Error {
    using Error::Error;
};

// Expression text rejected by the parser; position is a 0-based byte offset.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Identifier that is lexically valid but names nothing.
struct UnknownSymbol : SyntaxError {
    UnknownSymbol(const std::string& name, std::size_t pos)
        : SyntaxError("unknown symbol '" + name + "'", pos) {}
};

} // namespace qseries
