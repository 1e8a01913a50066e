#pragma once

#include <stdexcept>
#include <string>

namespace lojex {

// Input that violates a documented precondition (bad weights, zero
// polynomial where nonzero is required, inconsistent classification).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Textual input that does not conform to the polynomial grammar.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

}  // namespace lojex
