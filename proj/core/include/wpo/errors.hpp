#pragma once

#include <stdexcept>
#include <string>

namespace wpo {

/// Syntax or normal-form error while reading ordinal or expression text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                           message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An exhaustive search was asked to run beyond its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, int size, int guard)
      : std::runtime_error("guard exceeded: " + what + " on " + std::to_string(size) +
                           " elements (limit " + std::to_string(guard) + ")") {}
};

/// Invalid poset input: cycles, duplicate or unknown elements, malformed files.
class PosetError : public std::runtime_error {
 public:
  explicit PosetError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace wpo
