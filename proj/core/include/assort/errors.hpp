#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace assort {

enum class ErrorKind {
  duplicate_detected,
  corrupt_state,
  value_exceeds_universe,
  empty_region,
  infeasible_range,
  parse_error,
  verification_failed,
  io_failure,
};

/// Machine-readable name, e.g. "DuplicateDetected".
std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and suitable for
/// scripting; the message carries the offending value, index or seed.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace assort
