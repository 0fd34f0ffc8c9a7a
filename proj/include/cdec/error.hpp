#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdec {

enum class ErrorKind {
  kInvalidArgument,
  kNotInSpan,
  kDegenerateMember,
  kNotEulerian,
  kTooSmall,
  kEmpty,
  kOutOfRange,
  kNotDenseEnough,
  kNotCoprime,
  kNotPrime,
  kOrderConditionFailed,
  kTooLarge,
  kInfeasible,
  kNotACircuit,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by orbit_decompose when 2 is not a primitive root modulo p.
class OrderConditionFailed : public Error {
 public:
  OrderConditionFailed(unsigned p, unsigned order);

  unsigned p() const noexcept { return p_; }
  unsigned order() const noexcept { return order_; }

 private:
  unsigned p_;
  unsigned order_;
};

/// Malformed text input; line is 1-based, 0 when not attributable to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cdec
