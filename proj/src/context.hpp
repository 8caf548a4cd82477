#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attribute_set.hpp"
#include "lectic.hpp"

namespace fcai {

// A formal context: ordered objects with attribute rows over one universe.
// Immutable after construction; all operations are pure.
class FormalContext {
 public:
  // Throws std::invalid_argument on duplicate/empty object labels or rows
  // over a different universe. An empty object list is allowed.
  FormalContext(UniversePtr universe, std::vector<std::string> labels,
                std::vector<AttributeSet> rows);

  const UniversePtr& universe() const { return universe_; }
  std::size_t object_count() const { return rows_.size(); }
  std::size_t attribute_count() const { return universe_->size(); }
  const std::string& object_label(std::size_t g) const { return labels_.at(g); }
  const AttributeSet& row(std::size_t g) const { return rows_.at(g); }

  // B' — indices of the objects whose rows contain b.
  std::vector<std::uint32_t> derive_objects(const AttributeSet& b) const;

  // B'' — intersection of all rows containing b; M when no row does.
  AttributeSet close_attributes(const AttributeSet& b) const;

  // b = b''; the context membership predicate.
  bool is_intent(const AttributeSet& b) const;

 private:
  UniversePtr universe_;
  std::vector<std::string> labels_;
  std::vector<AttributeSet> rows_;
};

// Int(K) in lectic order via NextClosure; always ends with M.
std::vector<AttributeSet> enumerate_intents(const FormalContext& ctx,
                                            std::size_t cap = kDefaultEnumerationCap);

}  // namespace fcai
