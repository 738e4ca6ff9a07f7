#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmpoly {

enum class ErrorKind {
  kStructural,         // length / ambient mismatch, malformed values
  kParse,              // text or structured input rejected
  kOverflow,           // exponent arithmetic exceeded the cap
  kDegenerateIdeal,    // zero ideal or unit ideal where a proper ideal is needed
  kNotEquigenerated,   // generators of more than one degree
  kNoLinearQuotients,  // revlex ordering does not give linear quotients
  kExchangeAxiomViolated,
  kPrecondition,
  kBudgetExceeded,
  kInternal,           // cross-check between independent computations failed
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Positions are 1-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cmpoly
