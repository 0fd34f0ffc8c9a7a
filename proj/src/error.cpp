#include "cdec/error.hpp"

namespace cdec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotInSpan: return "NotInSpan";
    case ErrorKind::kDegenerateMember: return "DegenerateMember";
    case ErrorKind::kNotEulerian: return "NotEulerian";
    case ErrorKind::kTooSmall: return "TooSmall";
    case ErrorKind::kEmpty: return "Empty";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kNotDenseEnough: return "NotDenseEnough";
    case ErrorKind::kNotCoprime: return "NotCoprime";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kOrderConditionFailed: return "OrderConditionFailed";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kNotACircuit: return "NotACircuit";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

OrderConditionFailed::OrderConditionFailed(unsigned p, unsigned order)
    : Error(ErrorKind::kOrderConditionFailed,
            "multiplicative order of 2 modulo " + std::to_string(p) + " is " +
                std::to_string(order) + ", expected " + std::to_string(p - 1)),
      p_(p),
      order_(order) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorKind::kParse,
            line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace cdec
