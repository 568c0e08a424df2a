#include "privnet/error.hpp"

namespace privnet {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotDensity: return "NotDensity";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroBlock: return "ZeroBlock";
    case ErrorCode::FlagMissing: return "FlagMissing";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace privnet
