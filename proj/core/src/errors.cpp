#include "assort/errors.hpp"

namespace assort {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::duplicate_detected: return "DuplicateDetected";
    case ErrorKind::corrupt_state: return "CorruptState";
    case ErrorKind::value_exceeds_universe: return "ValueExceedsUniverse";
    case ErrorKind::empty_region: return "EmptyRegion";
    case ErrorKind::infeasible_range: return "InfeasibleRange";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::verification_failed: return "VerificationFailed";
    case ErrorKind::io_failure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace assort
