#pragma once

#include <stdexcept>
#include <string>

namespace gallagher {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible domain (nonpositive length, theta outside (0,1), ...).
class ParameterDomainError : public Error {
public:
    using Error::Error;
};

/// Input is well-formed but degenerate (zero-support weight, empty spec).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// An operation's precondition does not hold (missing log polynomial, zero minimum, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A table does not cover the integer range an integral touches.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A memory or size guard would be breached.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The requested closed form or family member is not available.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace gallagher
