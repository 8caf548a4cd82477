#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "attribute_set.hpp"
#include "context.hpp"
#include "lectic.hpp"

namespace fcai {

// X -> Y over one universe, stored verbatim (no normalization).
struct Implication {
  Implication(AttributeSet premise_, AttributeSet conclusion_);
  AttributeSet premise;
  AttributeSet conclusion;
};

// Ordered list of implications; the order is semantically material (HORN1
// scans for the first refutable implication) and duplicates are permitted.
class ImplicationList {
 public:
  explicit ImplicationList(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return imps_.size(); }
  bool empty() const { return imps_.empty(); }
  void push_back(Implication imp);  // universe-checked

  Implication& operator[](std::size_t i) { return imps_[i]; }
  const Implication& operator[](std::size_t i) const { return imps_[i]; }
  auto begin() { return imps_.begin(); }
  auto end() { return imps_.end(); }
  auto begin() const { return imps_.begin(); }
  auto end() const { return imps_.end(); }

 private:
  UniversePtr universe_;
  std::vector<Implication> imps_;
};

// a is closed under imp: premise not contained or conclusion contained.
bool is_model(const AttributeSet& a, const Implication& imp);
bool is_model(const AttributeSet& a, const ImplicationList& list);

// L(X): least superset of x closed under every implication (repeated-pass
// fixpoint).
AttributeSet closure(const ImplicationList& list, const AttributeSet& x);

// list |= imp  iff  imp.conclusion is contained in closure(list, imp.premise).
bool entails(const ImplicationList& list, const Implication& imp);

// Mod(L) in lectic order; always contains M.
std::vector<AttributeSet> enumerate_models(const ImplicationList& list,
                                           std::size_t cap = kDefaultEnumerationCap);

// Valid in ctx iff conclusion is contained in the context closure of the premise.
bool is_valid_in(const FormalContext& ctx, const Implication& imp);

// Duquenne-Guigues basis {P -> P'' : P pseudo-intent}, premises in lectic
// order (NextClosure over the closure operator firing known implications
// whose premise is a proper subset).
ImplicationList canonical_basis(const FormalContext& ctx,
                                std::size_t cap = kDefaultEnumerationCap);

// Mod(l1) == Mod(l2), by a single lectic scan with early exit.
bool equivalent(const ImplicationList& l1, const ImplicationList& l2,
                std::size_t cap = kDefaultEnumerationCap);

// Rendering: conclusion is printed minus the premise; an empty premise prints
// as "{}"; a conclusion equal to M (with non-full premise) prints as the
// falsum symbol. parse accepts both spellings back.
std::string format_implication(const Implication& imp);
std::string format_implications(const ImplicationList& list);

// One implication per line, "a, b -> c, d". Blank lines and lines starting
// with '#' are skipped. Throws ParseError with the offending line number.
ImplicationList parse_implications(const UniversePtr& universe, std::string_view text);

}  // namespace fcai
