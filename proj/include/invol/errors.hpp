#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invol {

/// Malformed textual input (graph6, edge list, DSL, matrix text).
/// `offset()` is the byte offset of the offending character, when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset = npos)
      : std::runtime_error(what), offset_(offset) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A function was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph has no witness of the requested shape.
class NotConstructible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace invol
