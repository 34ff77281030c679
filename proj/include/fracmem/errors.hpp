#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

// Precondition and domain violations use the standard hierarchy
// (std::invalid_argument, std::domain_error, std::out_of_range,
// std::overflow_error). The types below cover the failure modes that have no
// standard counterpart.

namespace fracmem {

/// A series or kernel computation did not converge within its term cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes disagreed beyond tolerance.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed CSV input. Carries the 1-based location of the offending field.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          source_(std::move(source)), line_(line), column_(column) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace fracmem
