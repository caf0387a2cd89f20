#pragma once

#include <stdexcept>
#include <string>

namespace clusterdt {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Unknown or unsupported (family, rank) combination, or a malformed type name.
class InvalidTypeError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed: two independent computation routes
// disagreed, or a closed form did not match its defining construction.
// This always indicates a bug, never bad user input.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

// A numeric routine failed to converge or left its domain of validity.
class NumericError : public Error {
public:
    using Error::Error;
};

// Operation invoked outside the size range it supports.
class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

} // namespace clusterdt
