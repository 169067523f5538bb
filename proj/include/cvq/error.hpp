#pragma once

#include <stdexcept>
#include <string>

namespace cvq {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different point spaces or have incompatible sizes.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace cvq
