#include "jfrt/error.hpp"

namespace jfrt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotUndirected: return "NotUndirected";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::NegativeOrder: return "NegativeOrder";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::GeometryMismatch: return "GeometryMismatch";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::TooManyLabels: return "TooManyLabels";
    case ErrorKind::BadDensity: return "BadDensity";
    case ErrorKind::ZeroSignal: return "ZeroSignal";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::Defective: return "Defective";
    case ErrorKind::NonRealQuadraticForm: return "NonRealQuadraticForm";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) noexcept {
  return kind == ErrorKind::ConvergenceFailure || kind == ErrorKind::Defective ||
         kind == ErrorKind::NonRealQuadraticForm;
}

}  // namespace jfrt
