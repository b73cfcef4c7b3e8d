#pragma once

#include <stdexcept>
#include <string>

namespace critcol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: out-of-range vertex, non-edge, precondition violated.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured cap (vertex count, variable count, ...).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Malformed DIMACS or formula text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A randomized generator ran out of its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

} // namespace critcol
