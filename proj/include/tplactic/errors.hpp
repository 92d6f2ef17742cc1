#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tplactic {

// Base for everything the library throws on bad input or exhausted limits.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller
// (e.g. row insertion into something that is not a row).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A time or index argument fell outside the valid range.
class RangeError : public Error {
public:
  using Error::Error;
};

// Exhaustive search would exceed its configured state budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// Textual or JSON input could not be parsed. `position` is a byte offset
// into the input (npos when not meaningful).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? what
                  : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// An internal consistency check failed. Seeing one of these is a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace tplactic
