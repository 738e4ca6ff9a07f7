#include "cmpoly/error.hpp"

#include <string>

namespace cmpoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kStructural:
      return "StructuralError";
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kOverflow:
      return "ExponentOverflow";
    case ErrorKind::kDegenerateIdeal:
      return "DegenerateIdeal";
    case ErrorKind::kNotEquigenerated:
      return "NotEquigenerated";
    case ErrorKind::kNoLinearQuotients:
      return "NoLinearQuotients";
    case ErrorKind::kExchangeAxiomViolated:
      return "ExchangeAxiomViolated";
    case ErrorKind::kPrecondition:
      return "PreconditionViolated";
    case ErrorKind::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorKind::kInternal:
      return "InternalInconsistency";
  }
  return "Error";
}

namespace {

std::string located(std::size_t line, std::size_t column,
                    const std::string& message) {
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::kParse, located(line, column, message)),
      line_(line),
      column_(column) {}

}  // namespace cmpoly
