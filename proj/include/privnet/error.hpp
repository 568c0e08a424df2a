#pragma once

#include <stdexcept>
#include <string>

namespace privnet {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  StructureMismatch,
  NotUnitary,
  NotDensity,
  IndexOutOfRange,
  ZeroBlock,
  FlagMissing,
  DomainError,
  UnknownFigure,
  BadGrid,
  BadSpec,
  Infeasible,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace privnet
