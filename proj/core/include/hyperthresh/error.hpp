#pragma once

#include <stdexcept>
#include <string>

namespace hyperthresh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's preconditions.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A degree/neighborhood query with an out-of-range set size.
class InvalidQuery : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Malformed hypergraph file or JSON document.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// An exact count does not fit the 64-bit arithmetic contract.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// The operation is well-formed but does not apply to this input
/// (e.g. a parity certificate for a hypergraph outside the extremal family).
class NotApplicable : public Error {
public:
    using Error::Error;
};

} // namespace hyperthresh
