/**
 * @file errors.hpp
 * @brief Exception types shared by every krtl module.
 *
 * Domain errors (a web that cannot be reduced, an enumeration that would
 * exceed its cap, a braid that violates a precondition) derive from
 * krtl::Error so callers such as the CLI can map them to exit code 1.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace krtl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An operation was called on input outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Integer exponent or coefficient arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::string exact_count, std::string cap)
        : Error(what + ": " + exact_count + " exceeds cap " + cap),
          count_(std::move(exact_count)),
          cap_(std::move(cap)) {}

    const std::string& count() const noexcept { return count_; }
    const std::string& cap() const noexcept { return cap_; }

private:
    std::string count_;
    std::string cap_;
};

/// No web relation applies and the web is not a union of circles.
class Irreducible : public Error {
public:
    using Error::Error;
};

}  // namespace krtl
