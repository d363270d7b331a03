#pragma once

#include <stdexcept>
#include <string>

namespace cliquepoly {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when the input has no lines.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation was called outside its precondition (e.g. deleting a non-edge).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested work exceeds a supported enumeration bound.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace cliquepoly
