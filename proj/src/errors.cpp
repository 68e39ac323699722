#include "matdec/errors.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace matdec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::NotStandardizable: return "NotStandardizable";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotCosimple: return "NotCosimple";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonStandardForm: return "NonStandardForm";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::LineageIncomplete: return "LineageIncomplete";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::size_t cap_from_env() {
  const char* raw = std::getenv("MATDEC_CAP");
  if (raw == nullptr) return 16;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return 16;
  return value;
}

std::atomic<std::size_t>& cap_slot() {
  static std::atomic<std::size_t> cap{cap_from_env()};
  return cap;
}

}  // namespace

std::size_t ground_set_cap() { return cap_slot().load(std::memory_order_relaxed); }

void set_ground_set_cap(std::size_t cap) { cap_slot().store(cap, std::memory_order_relaxed); }

void require_within_cap(std::size_t n, std::size_t cap, std::string_view what) {
  if (n > cap) {
    throw Error(ErrorKind::GroundSetTooLarge,
                std::string(what) + ": ground set of " + std::to_string(n) +
                    " elements exceeds cap " + std::to_string(cap));
  }
}

}  // namespace matdec
