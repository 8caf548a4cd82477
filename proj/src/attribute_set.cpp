#include "attribute_set.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace fcai {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

AttributeUniverse::AttributeUniverse(std::vector<std::string> names) : names_(std::move(names)) {}

UniversePtr AttributeUniverse::make(std::vector<std::string> names) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("attribute label must not be empty");
    if (names[i].find('\n') != std::string::npos)
      throw std::invalid_argument("attribute label must not contain a newline");
    if (!seen.emplace(names[i], i).second)
      throw std::invalid_argument("duplicate attribute label: " + names[i]);
  }
  return UniversePtr(new AttributeUniverse(std::move(names)));
}

std::optional<std::size_t> AttributeUniverse::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw std::invalid_argument("attribute universes differ");
}

AttributeSet::AttributeSet(UniversePtr universe)
    : universe_(std::move(universe)), words_(word_count(universe_ ? universe_->size() : 0), 0) {
  if (!universe_) throw std::invalid_argument("attribute set needs a universe");
}

AttributeSet AttributeSet::full(UniversePtr universe) {
  AttributeSet s(std::move(universe));
  const std::size_t n = s.universe_size();
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  if (n % kWordBits != 0 && !s.words_.empty())
    s.words_.back() &= (1ULL << (n % kWordBits)) - 1;
  return s;
}

AttributeSet AttributeSet::from_counter(const UniversePtr& universe, std::uint64_t counter) {
  AttributeSet s(universe);
  const std::size_t n = s.universe_size();
  if (n > 63) throw std::invalid_argument("from_counter supports at most 63 attributes");
  for (std::size_t j = 0; j < n; ++j)
    if ((counter >> (n - 1 - j)) & 1ULL) s.add(j);
  return s;
}

std::size_t AttributeSet::universe_size() const { return universe_->size(); }

void AttributeSet::check_index(std::size_t i) const {
  if (i >= universe_->size())
    throw std::invalid_argument("attribute position " + std::to_string(i) +
                                " outside universe of size " + std::to_string(universe_->size()));
}

void AttributeSet::add(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] |= 1ULL << (i % kWordBits);
}

void AttributeSet::remove(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] &= ~(1ULL << (i % kWordBits));
}

bool AttributeSet::contains(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1ULL;
}

std::size_t AttributeSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool AttributeSet::empty() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

void AttributeSet::clear() {
  for (auto& w : words_) w = 0;
}

bool AttributeSet::subset_of(const AttributeSet& other) const {
  require_same_universe(universe_, other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool AttributeSet::proper_subset_of(const AttributeSet& other) const {
  return subset_of(other) && *this != other;
}

bool AttributeSet::operator==(const AttributeSet& other) const {
  require_same_universe(universe_, other.universe_);
  return words_ == other.words_;
}

AttributeSet& AttributeSet::operator|=(const AttributeSet& other) {
  require_same_universe(universe_, other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

AttributeSet& AttributeSet::operator&=(const AttributeSet& other) {
  require_same_universe(universe_, other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

AttributeSet& AttributeSet::operator-=(const AttributeSet& other) {
  require_same_universe(universe_, other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

AttributeSet& AttributeSet::operator^=(const AttributeSet& other) {
  require_same_universe(universe_, other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool AttributeSet::lectic_less(const AttributeSet& other) const {
  require_same_universe(universe_, other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (other.words_[i] & lowest) != 0;
    }
  }
  return false;  // equal
}

std::uint64_t AttributeSet::lectic_counter() const {
  const std::size_t n = universe_->size();
  if (n > 63) throw std::invalid_argument("lectic_counter supports at most 63 attributes");
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (contains(j)) c |= 1ULL << (n - 1 - j);
  return c;
}

bool AttributeSet::equal_below(const AttributeSet& other, std::size_t k) const {
  require_same_universe(universe_, other.universe_);
  const std::size_t full_words = k / kWordBits;
  for (std::size_t i = 0; i < full_words; ++i)
    if (words_[i] != other.words_[i]) return false;
  const std::size_t rem = k % kWordBits;
  if (rem != 0 && full_words < words_.size()) {
    const std::uint64_t mask = (1ULL << rem) - 1;
    if ((words_[full_words] & mask) != (other.words_[full_words] & mask)) return false;
  }
  return true;
}

std::vector<std::size_t> AttributeSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&out](std::size_t i) { out.push_back(i); });
  return out;
}

void AttributeSet::for_each(const std::function<void(std::size_t)>& fn) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      fn(w * kWordBits + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
}

std::string AttributeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += universe_->name(i);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace fcai
