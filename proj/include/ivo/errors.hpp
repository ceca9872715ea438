#pragma once

#include <stdexcept>
#include <string>

namespace ivo {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, empty interval, invalid parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// An exhaustive oracle was asked to handle more intervals than its cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A restricted exposed-part set did not admit any decomposition of some
/// covered interval.
class InfeasibleEnumeration : public Error {
public:
    using Error::Error;
};

/// An operation's structural precondition does not hold for the instance
/// (e.g. the pairwise enumerator on intervals that do not pairwise meet).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A tabulated cost function was evaluated at a length it does not list.
class UndefinedLength : public Error {
public:
    using Error::Error;
};

}  // namespace ivo
