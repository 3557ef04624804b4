#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invmaps {

// A mathematically invalid request: bad group, unrepresentable rank,
// missing monomial. The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input. The CLI maps these to exit status 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

}  // namespace invmaps
