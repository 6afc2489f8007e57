#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jfrt {

enum class ErrorKind {
  // validation
  InvalidArgument,
  DimensionMismatch,
  SizeOverflow,
  NotHermitian,
  NotUnitary,
  NotUndirected,
  NegativeEigenvalue,
  NegativeOrder,
  TooSmall,
  FlavorMismatch,
  WindowTooLarge,
  GeometryMismatch,
  TooFewPoints,
  TooManyLabels,
  BadDensity,
  ZeroSignal,
  DegenerateGeometry,
  ParseError,
  // numerical
  ConvergenceFailure,
  Defective,
  NonRealQuadraticForm,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for failures of the numerics themselves (as opposed to bad input).
bool is_numerical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jfrt
