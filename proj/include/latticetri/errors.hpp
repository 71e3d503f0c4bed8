#pragma once

#include <stdexcept>
#include <string>

namespace latticetri {

// Error taxonomy mirrors the CLI exit-code contract:
//   ParseError -> 2, DomainError -> 3, InternalError -> 70.

/// Malformed input text or JSON.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but outside an operation's domain
/// (negative entries, dimension mismatch, guard exceeded, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural guarantee that must hold for every valid input failed.
/// Indicates a bug in this library, never a bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace latticetri
