#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxcon {

// Operands of incompatible size (matrix/matrix, matrix/vector, pool members).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact finite arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A node index outside 0..n-1, or an edge that does not exist.
class NodeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed text or JSON input; line is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace maxcon
