#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galcov {

/// Failure categories shared by every module. The CLI maps these onto its
/// exit-code contract (see tools/galcov.cpp).
enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  DegreeBoundExceeded,
  InvalidTable,
  AbelianInput,
  NotNormal,
  NotSubgroup,
  NonInvertibleOrder,
  SplittingFailure,
  NotGoodSet,
  NotAssociative,
  NotCommutative,
  NoUnit,
  InvalidAction,
  NonSplitAlgebra,
  NotTransitive,
  HypothesisUnmet,
  NotSquare,
  NonSplitFiber,
  MissingRootOfUnity,
  CapExceeded,
  SchemaError,
  InvalidArgument,
  Internal,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string &what) {
  if (!cond)
    throw Error(kind, what);
}

} // namespace galcov
