#pragma once

#include <stdexcept>
#include <string>

namespace mpm {

// Malformed input text; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input violating a mathematical precondition.
class DataError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation that could not finish within its limits.
class ComputationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mpm
