#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsc {

enum class Errc {
  NotPIntegral,
  NotAUnit,
  DivisionByZeroPoly,
  ModuliNotCoprime,
  DenominatorNotUnit,
  NegativeLength,
  OutOfRange,
  ZeroDenominatorFactor,
  NonTerminating,
  DegenerateParameters,
  SyntaxError,
  UnboundSymbol,
  NonIntegerBound,
  DivisionByZero,
  UnknownKind,
  SamplingExhausted,
  SideConditionViolated,
  PrecisionBudgetExceeded,
  InsufficientPrecision,
  UnknownStatement,
};

std::string_view errc_name(Errc code);

/// Every recoverable failure in the library is an `Error` carrying a stable code.
/// Contract violations that would silently corrupt a verdict (mixing p-adic
/// precisions, for instance) throw `std::logic_error` instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, std::string expected)
      : Error(Errc::SyntaxError, "line " + std::to_string(line) + ", col " + std::to_string(col) +
                                     ": expected " + expected),
        line_(line),
        col_(col),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

}  // namespace qsc
