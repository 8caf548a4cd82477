#include "context.hpp"

#include <stdexcept>
#include <unordered_set>

namespace fcai {

FormalContext::FormalContext(UniversePtr universe, std::vector<std::string> labels,
                             std::vector<AttributeSet> rows)
    : universe_(std::move(universe)), labels_(std::move(labels)), rows_(std::move(rows)) {
  if (!universe_) throw std::invalid_argument("context needs a universe");
  if (labels_.size() != rows_.size())
    throw std::invalid_argument("object label and row counts differ");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("object label must not be empty");
    if (l.find('\n') != std::string::npos)
      throw std::invalid_argument("object label must not contain a newline");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate object label: " + l);
  }
  for (const auto& r : rows_) require_same_universe(universe_, r.universe());
}

std::vector<std::uint32_t> FormalContext::derive_objects(const AttributeSet& b) const {
  require_same_universe(universe_, b.universe());
  std::vector<std::uint32_t> out;
  for (std::size_t g = 0; g < rows_.size(); ++g)
    if (b.subset_of(rows_[g])) out.push_back(static_cast<std::uint32_t>(g));
  return out;
}

AttributeSet FormalContext::close_attributes(const AttributeSet& b) const {
  require_same_universe(universe_, b.universe());
  AttributeSet closed = AttributeSet::full(universe_);
  bool any = false;
  for (const auto& row : rows_) {
    if (b.subset_of(row)) {
      closed &= row;
      any = true;
    }
  }
  if (!any) return AttributeSet::full(universe_);  // empty intersection is M
  return closed;
}

bool FormalContext::is_intent(const AttributeSet& b) const {
  return close_attributes(b) == b;
}

std::vector<AttributeSet> enumerate_intents(const FormalContext& ctx, std::size_t cap) {
  require_enumerable(ctx.attribute_count(), cap);
  std::vector<AttributeSet> out;
  auto close = [&ctx](AttributeSet s) { return ctx.close_attributes(s); };
  std::optional<AttributeSet> a = close(AttributeSet(ctx.universe()));
  while (a) {
    out.push_back(*a);
    a = next_closure(*a, close);
  }
  return out;
}

}  // namespace fcai
