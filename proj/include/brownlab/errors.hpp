#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brownlab {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A function whose fast path needs a nondecreasing growth function was given one
// that is not flagged nondecreasing.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientPrefix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MagnitudeOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Malformed textual input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace brownlab
