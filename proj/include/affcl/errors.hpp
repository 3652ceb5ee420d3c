#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affcl {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  ZeroRay,
  NotPointed,
  NotFullDimensional,
  NotInMonoid,
  NotEffective,
  NonLocalBase,
  MissingComaximalData,
  InvalidRange,
  TorsionInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::ZeroRay: return "ZeroRay";
  case ErrorKind::NotPointed: return "NotPointed";
  case ErrorKind::NotFullDimensional: return "NotFullDimensional";
  case ErrorKind::NotInMonoid: return "NotInMonoid";
  case ErrorKind::NotEffective: return "NotEffective";
  case ErrorKind::NonLocalBase: return "NonLocalBase";
  case ErrorKind::MissingComaximalData: return "MissingComaximalData";
  case ErrorKind::InvalidRange: return "InvalidRange";
  case ErrorKind::TorsionInput: return "TorsionInput";
  }
  return "Unknown";
}

/// Every validation failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace affcl
