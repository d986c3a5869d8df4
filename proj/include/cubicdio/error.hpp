#pragma once

#include <stdexcept>
#include <string>

namespace cubicdio {

enum class ErrorKind {
  ZeroPolynomial,
  NegativeInput,
  ZeroInput,
  BudgetExceeded,
  InconsistentInput,
  CasusIrreducibilis,
  NotARoot,
  DegenerateFamily,
  InvalidBound,
  InvalidArgument,
  HypothesisViolation,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubicdio
