#pragma once

#include <stdexcept>
#include <string>

namespace hopfid {

// Arithmetic combined scalars from incompatible fields.
struct FieldMismatchError : std::runtime_error {
    explicit FieldMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by an exact zero (scalar inverse, polynomial denominator, pivot).
struct DivisionByZeroError : std::runtime_error {
    explicit DivisionByZeroError(const std::string& msg) : std::runtime_error(msg) {}
};

// Vector/matrix/table sizes do not line up.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (expressions, scalar literals, JSON payloads).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line(0), col(0) {}
    int line;
    int col;
};

// Structured data that parses but violates a required property
// (non-group Cayley table, failed axiom precondition, bad label).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented resource cap was exceeded (degree limit, word-count cap).
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hopfid
