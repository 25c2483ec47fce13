#pragma once

#include <stdexcept>
#include <string>

namespace monosplit {

/// Two operands live in polynomial rings with different variable counts.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed a hard size cap (Taylor oracle, cover search).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A variable does not split the generators into two nonempty parts.
class DegeneratePartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Carries the 1-based line and offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string token, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what +
                             (token.empty() ? std::string{} : " (token '" + token + "')")),
          line_(line), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

}  // namespace monosplit
