#include "implication.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace fcai {

namespace {
constexpr std::string_view kFalsum = "⊥";  // ⊥
}

Implication::Implication(AttributeSet premise_, AttributeSet conclusion_)
    : premise(std::move(premise_)), conclusion(std::move(conclusion_)) {
  require_same_universe(premise.universe(), conclusion.universe());
}

ImplicationList::ImplicationList(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw std::invalid_argument("implication list needs a universe");
}

void ImplicationList::push_back(Implication imp) {
  require_same_universe(universe_, imp.premise.universe());
  imps_.push_back(std::move(imp));
}

bool is_model(const AttributeSet& a, const Implication& imp) {
  require_same_universe(a.universe(), imp.premise.universe());
  return !imp.premise.subset_of(a) || imp.conclusion.subset_of(a);
}

bool is_model(const AttributeSet& a, const ImplicationList& list) {
  require_same_universe(a.universe(), list.universe());
  for (const auto& imp : list)
    if (imp.premise.subset_of(a) && !imp.conclusion.subset_of(a)) return false;
  return true;
}

AttributeSet closure(const ImplicationList& list, const AttributeSet& x) {
  require_same_universe(x.universe(), list.universe());
  AttributeSet out = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : list) {
      if (imp.premise.subset_of(out) && !imp.conclusion.subset_of(out)) {
        out |= imp.conclusion;
        changed = true;
      }
    }
  }
  return out;
}

bool entails(const ImplicationList& list, const Implication& imp) {
  require_same_universe(list.universe(), imp.premise.universe());
  return imp.conclusion.subset_of(closure(list, imp.premise));
}

std::vector<AttributeSet> enumerate_models(const ImplicationList& list, std::size_t cap) {
  const std::size_t n = list.universe()->size();
  require_enumerable(n, cap);
  std::vector<AttributeSet> out;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t c = 0; c < total; ++c) {
    AttributeSet x = AttributeSet::from_counter(list.universe(), c);
    if (is_model(x, list)) out.push_back(std::move(x));
  }
  return out;
}

bool is_valid_in(const FormalContext& ctx, const Implication& imp) {
  require_same_universe(ctx.universe(), imp.premise.universe());
  return imp.conclusion.subset_of(ctx.close_attributes(imp.premise));
}

ImplicationList canonical_basis(const FormalContext& ctx, std::size_t cap) {
  require_enumerable(ctx.attribute_count(), cap);
  ImplicationList basis(ctx.universe());
  // fixpoint firing only implications whose premise is a proper subset; its
  // closed sets are exactly the intents plus the pseudo-intents found so far
  auto preclose = [&basis](AttributeSet s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& imp : basis) {
        if (imp.premise.proper_subset_of(s) && !imp.conclusion.subset_of(s)) {
          s |= imp.conclusion;
          changed = true;
        }
      }
    }
    return s;
  };
  std::optional<AttributeSet> a = AttributeSet(ctx.universe());  // preclose(∅) = ∅
  while (a) {
    AttributeSet closed = ctx.close_attributes(*a);
    if (closed != *a) basis.push_back(Implication(*a, std::move(closed)));
    a = next_closure(*a, preclose);
  }
  return basis;
}

bool equivalent(const ImplicationList& l1, const ImplicationList& l2, std::size_t cap) {
  require_same_universe(l1.universe(), l2.universe());
  const std::size_t n = l1.universe()->size();
  require_enumerable(n, cap);
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t c = 0; c < total; ++c) {
    AttributeSet x = AttributeSet::from_counter(l1.universe(), c);
    if (is_model(x, l1) != is_model(x, l2)) return false;
  }
  return true;
}

namespace {

std::string format_side(const AttributeSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += s.universe()->name(i);
    first = false;
  });
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

AttributeSet parse_side(const UniversePtr& universe, std::string_view text, bool allow_falsum,
                        std::size_t line_no) {
  const std::string trimmed = trim(text);
  if (trimmed == "{}") return AttributeSet(universe);
  if (allow_falsum && trimmed == kFalsum) return AttributeSet::full(universe);
  AttributeSet out(universe);
  std::size_t start = 0;
  const std::string& s = trimmed;
  if (s.empty()) throw ParseError(line_no, "empty attribute list (write \"{}\" for the empty set)");
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    const std::string name =
        trim(std::string_view(s).substr(start, comma == std::string::npos ? s.size() - start
                                                                          : comma - start));
    if (name.empty()) throw ParseError(line_no, "empty attribute name in list");
    auto idx = universe->index_of(name);
    if (!idx) throw ParseError(line_no, "unknown attribute \"" + name + "\"");
    out.add(*idx);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_implication(const Implication& imp) {
  const AttributeSet full = AttributeSet::full(imp.premise.universe());
  std::string out = format_side(imp.premise);
  out += " -> ";
  if (imp.conclusion == full && imp.premise != full)
    out += kFalsum;
  else
    out += format_side(imp.conclusion - imp.premise);
  return out;
}

std::string format_implications(const ImplicationList& list) {
  std::string out;
  for (const auto& imp : list) {
    out += format_implication(imp);
    out += '\n';
  }
  return out;
}

ImplicationList parse_implications(const UniversePtr& universe, std::string_view text) {
  ImplicationList out(universe);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string stripped = trim(line);
    if (!stripped.empty() && stripped[0] != '#') {
      const std::size_t arrow = stripped.find("->");
      if (arrow == std::string::npos)
        throw ParseError(line_no, "expected \"premise -> conclusion\"");
      AttributeSet premise =
          parse_side(universe, std::string_view(stripped).substr(0, arrow), false, line_no);
      AttributeSet conclusion =
          parse_side(universe, std::string_view(stripped).substr(arrow + 2), true, line_no);
      out.push_back(Implication(std::move(premise), std::move(conclusion)));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace fcai
