#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed pattern or instance text. `offset()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Input violates an operation's precondition (non-regular pattern, missing image, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exponential algorithm would exceed its configured work cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pvm
