#pragma once

#include <stdexcept>
#include <string>

namespace lieconn {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different algebras (or graphs of different size/kind).
class MismatchError : public Error {
public:
    using Error::Error;
};

/// A basis element, coordinate, or node index violates its invariants.
class DomainError : public Error {
public:
    using Error::Error;
};

/// System-file syntax or validation failure. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Internal consistency violation: a graphical verdict disagrees with the
/// rank-condition oracle, or a fixpoint failed to converge in its bound.
/// Always indicates a bug, never bad input.
class SoundnessError : public Error {
public:
    using Error::Error;
};

}  // namespace lieconn
