#ifndef LANTERN_ERRORS_HPP
#define LANTERN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lantern {

// Generator or strand index outside the allowed range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Operands live in different groups (rank, strand count, variable context).
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word grew past the configured length cap.
class WordLengthError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A computation would exceed the configured monomial/term cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but outside what an operation supports.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Syntax or validation error in textual input, tagged with a byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace lantern

#endif  // LANTERN_ERRORS_HPP
