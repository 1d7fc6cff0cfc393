#pragma once

#include <stdexcept>
#include <string>

namespace latvis {

// Input outside the mathematical domain of an operation (zero gcd_k argument,
// vertical curve, invalid base set, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A size or memory guard was hit.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Malformed textual input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::invalid_argument(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace latvis
