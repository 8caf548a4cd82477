#pragma once

#include <cstdint>
#include <optional>

#include "attribute_set.hpp"
#include "errors.hpp"

namespace fcai {

// Default bound on any 2^|M| scan.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

inline void require_enumerable(std::size_t attributes, std::size_t cap) {
  if (attributes > cap)
    throw CapacityError("attribute count " + std::to_string(attributes) +
                        " exceeds enumeration cap " + std::to_string(cap));
}

// Ganter's NextClosure step: the lectically smallest closed set greater than
// `a` under an arbitrary closure operator, or nullopt when `a` is the last
// one (the full set). `close` must be extensive, monotone and idempotent.
template <typename CloseFn>
std::optional<AttributeSet> next_closure(const AttributeSet& a, CloseFn&& close) {
  AttributeSet prefix = a;
  for (std::size_t k = a.universe_size(); k-- > 0;) {
    if (prefix.contains(k)) {
      prefix.remove(k);
    } else {
      AttributeSet candidate = prefix;
      candidate.add(k);
      AttributeSet closed = close(std::move(candidate));
      if (closed.equal_below(prefix, k)) return closed;
    }
  }
  return std::nullopt;
}

}  // namespace fcai
