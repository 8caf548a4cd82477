#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fcai {

class AttributeUniverse;
using UniversePtr = std::shared_ptr<const AttributeUniverse>;

// Fixed, ordered attribute alphabet M. The position of a label defines its
// bit position in every AttributeSet over this universe and the lectic order.
class AttributeUniverse {
 public:
  // Throws std::invalid_argument on duplicate or empty labels.
  static UniversePtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  explicit AttributeUniverse(std::vector<std::string> names);
  std::vector<std::string> names_;
};

// Same universe = same object or identical label sequence.
bool same_universe(const UniversePtr& a, const UniversePtr& b);
// Throws std::invalid_argument unless same_universe(a, b).
void require_same_universe(const UniversePtr& a, const UniversePtr& b);

// Subset of M as a bitmask over the universe's positions. Attribute 0 is the
// least significant bit of word 0 and the lectically most significant one.
class AttributeSet {
 public:
  explicit AttributeSet(UniversePtr universe);
  static AttributeSet full(UniversePtr universe);
  // Lectic rank decoding: counter bit (|M|-1-j) holds attribute j, so
  // numeric counter order equals lectic order. Requires |M| <= 63.
  static AttributeSet from_counter(const UniversePtr& universe, std::uint64_t counter);

  const UniversePtr& universe() const { return universe_; }
  std::size_t universe_size() const;

  void add(std::size_t i);     // throws std::invalid_argument when i >= |M|
  void remove(std::size_t i);
  bool contains(std::size_t i) const;
  std::size_t count() const;
  bool empty() const;
  void clear();

  bool subset_of(const AttributeSet& other) const;
  bool proper_subset_of(const AttributeSet& other) const;
  bool operator==(const AttributeSet& other) const;
  bool operator!=(const AttributeSet& other) const { return !(*this == other); }

  AttributeSet& operator|=(const AttributeSet& other);
  AttributeSet& operator&=(const AttributeSet& other);
  AttributeSet& operator-=(const AttributeSet& other);
  AttributeSet& operator^=(const AttributeSet& other);
  friend AttributeSet operator|(AttributeSet a, const AttributeSet& b) { return a |= b; }
  friend AttributeSet operator&(AttributeSet a, const AttributeSet& b) { return a &= b; }
  friend AttributeSet operator-(AttributeSet a, const AttributeSet& b) { return a -= b; }
  friend AttributeSet operator^(AttributeSet a, const AttributeSet& b) { return a ^= b; }

  // A < B iff the smallest attribute where they differ belongs to B.
  bool lectic_less(const AttributeSet& other) const;
  // Inverse of from_counter. Requires |M| <= 63.
  std::uint64_t lectic_counter() const;
  // Bits below position k agree with `other`.
  bool equal_below(const AttributeSet& other, std::size_t k) const;

  std::vector<std::size_t> indices() const;
  void for_each(const std::function<void(std::size_t)>& fn) const;

  // "{a, b}"-style rendering with universe labels.
  std::string to_string() const;

  // raw word access for hashing/tests
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_index(std::size_t i) const;
  UniversePtr universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace fcai
