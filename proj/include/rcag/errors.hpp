#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcag {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class VersionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No DD threshold is available for the requested (m, alpha).
class MissingThreshold : public std::runtime_error {
public:
    MissingThreshold(std::size_t m, double alpha);

    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }

private:
    std::size_t m_;
    double alpha_;
};

}  // namespace rcag
