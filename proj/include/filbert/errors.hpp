#pragma once

#include <stdexcept>
#include <string>

namespace filbert {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division (or inversion) with a zero divisor.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// An argument lies outside the domain of the requested operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Matrix dimensions do not fit the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A matrix that was expected to be invertible is singular.
class SingularError : public Error {
public:
    using Error::Error;
};

// A value that a theorem asserts to be an integer failed that assertion.
class IntegralityViolationError : public Error {
public:
    using Error::Error;
};

// The requested operation does not support this element kind.
class UnsupportedElementKindError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

// A string could not be parsed as a value of the requested type.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace filbert
