#pragma once

#include <stdexcept>
#include <string>

namespace mcgauge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A degree query on a non-homogeneous element, or a degree mismatch.
class DegreeError : public Error {
public:
    using Error::Error;
};

class UnsupportedArity : public Error {
public:
    using Error::Error;
};

/// Operation not defined for this algebra kind (e.g. the dgla formula on an L-infinity spec).
class KindError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed, typically "input is not Maurer-Cartan".
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A nilpotent series failed to terminate within its weight bound.
class DivergenceError : public Error {
public:
    using Error::Error;
};

class InvertibilityError : public Error {
public:
    using Error::Error;
};

/// Semantic problem in an algebra specification (bad degree, weight, key, ...).
class SpecError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

} // namespace mcgauge
