#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ci2 {

// Malformed polynomial text. offset is the byte position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Operands live in different rings (or under different monomial orders).
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed: inhomogeneous input, singular f,
// infinite-dimensional quotient where a finite one was required, ...
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Resample or time budget exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ci2
