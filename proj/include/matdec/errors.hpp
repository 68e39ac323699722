#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matdec {

enum class ErrorKind {
  UnknownElement,
  DuplicateLabel,
  OverlappingSets,
  LengthMismatch,
  DimensionCapExceeded,
  GroundSetTooLarge,
  NotStandardizable,
  NotSimple,
  NotCosimple,
  PreconditionUnmet,
  ParseError,
  DimensionMismatch,
  NonStandardForm,
  UnknownKey,
  LineageIncomplete,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what the CLI
/// maps to exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Ground-set size cap for exhaustive scans. Reads MATDEC_CAP once; default 16.
std::size_t ground_set_cap();

/// Overrides the cap for the remainder of the process (CLI and tests).
void set_ground_set_cap(std::size_t cap);

void require_within_cap(std::size_t n, std::size_t cap, std::string_view what);

}  // namespace matdec
