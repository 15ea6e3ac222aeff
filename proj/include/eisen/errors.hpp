#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eisen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad input shape or value: the CLI maps these to a usage error
struct UsageError : Error {
  using Error::Error;
};

struct UnsupportedCartanType : UsageError {
  using UsageError::UsageError;
};

struct DimensionMismatch : UsageError {
  using UsageError::UsageError;
};

struct NotMaximal : UsageError {
  NotMaximal() : UsageError("parabolic is not maximal") {}
};

struct SymbolCollision : UsageError {
  using UsageError::UsageError;
};

struct InconsistentRelations : UsageError {
  using UsageError::UsageError;
};

// numeric trouble
struct NumericError : Error {
  using Error::Error;
};

struct CapExceeded : NumericError {
  std::uint64_t order;
  explicit CapExceeded(std::uint64_t n)
      : NumericError("Weyl group order " + std::to_string(n) + " exceeds cap"), order(n) {}
};

struct PoleAt : NumericError {
  std::complex<double> where;
  PoleAt(std::complex<double> z, const std::string& what)
      : NumericError(what), where(z) {}
};

struct DomainError : NumericError {
  using NumericError::NumericError;
};

struct Singular : NumericError {
  using NumericError::NumericError;
};

struct ConvergenceFailure : NumericError {
  double achieved;
  ConvergenceFailure(const std::string& what, double err)
      : NumericError(what + " (achieved error " + std::to_string(err) + ")"), achieved(err) {}
};

struct OverflowGuard : NumericError {
  using NumericError::NumericError;
};

}  // namespace eisen
