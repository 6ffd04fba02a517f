#pragma once

#include <cstddef>
#include <optional>

#include "assort/word_spec.hpp"

namespace assort {

/// Address of a value inside the imaginary linear subspace: the node index
/// and the bit within that node's record.
struct NodeSlot {
  std::size_t node;
  unsigned bit;

  friend constexpr bool operator==(const NodeSlot&, const NodeSlot&) = default;
};

/// Monotone bijective partial super hash. Maps value to
/// ((value - delta) div (w-1), (value - delta) mod (w-1)) when the quotient
/// is below n, std::nullopt otherwise (the value is deferred to a later pass).
///
/// Requires value >= delta. The range test is done on the quotient so that
/// (w-1)*n is never formed.
constexpr std::optional<NodeSlot> compute_hash(word_t value, word_t delta,
                                               std::size_t n,
                                               const WordSpec& spec) noexcept {
  const word_t offset = value - delta;
  const word_t width = spec.record_bits();
  const word_t node = offset / width;
  if (node >= n) {
    return std::nullopt;
  }
  return NodeSlot{static_cast<std::size_t>(node),
                  static_cast<unsigned>(offset % width)};
}

/// Inverse of the node half of compute_hash: the smallest value mapped to
/// the node at `position`.
constexpr word_t node_base(std::size_t position, word_t delta,
                           const WordSpec& spec) noexcept {
  return static_cast<word_t>(position) * spec.record_bits() + delta;
}

}  // namespace assort
