#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

enum class ErrorKind {
  InvalidArgument,
  NotADouble,
  NotADoubleIndex,
  BoxOverflow,
  IndexOutOfRange,
  SpaceMismatch,
  DegreeOutOfRange,
  MissingChernDegree,
  DimensionMismatch,
  SupportOutsideStaircase,
  NonIntegral,
  Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the engine is reported through this type;
/// `kind()` lets front ends map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotADouble: return "NotADouble";
    case ErrorKind::NotADoubleIndex: return "NotADoubleIndex";
    case ErrorKind::BoxOverflow: return "BoxOverflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::MissingChernDegree: return "MissingChernDegree";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SupportOutsideStaircase: return "SupportOutsideStaircase";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace schubert
