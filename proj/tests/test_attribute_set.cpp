#include "doctest.h"

#include "attribute_set.hpp"
#include "rng.hpp"

using fcai::AttributeSet;
using fcai::AttributeUniverse;
using fcai::UniversePtr;

namespace {

UniversePtr abc() { return AttributeUniverse::make({"a", "b", "c"}); }

AttributeSet make(const UniversePtr& u, std::initializer_list<std::size_t> bits) {
  AttributeSet s(u);
  for (auto b : bits) s.add(b);
  return s;
}

}  // namespace

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(AttributeUniverse::make({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(AttributeUniverse::make({""}), std::invalid_argument);
  CHECK(AttributeUniverse::make({})->size() == 0);
  auto u = abc();
  CHECK(u->index_of("b") == 1);
  CHECK(!u->index_of("z"));
}

TEST_CASE("basic set operations") {
  auto u = abc();
  AttributeSet s(u);
  CHECK(s.empty());
  s.add(0);
  s.add(2);
  CHECK(s.count() == 2);
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK_THROWS_AS(s.add(3), std::invalid_argument);
  CHECK(AttributeSet::full(u).count() == 3);
  CHECK(s.to_string() == "{a, c}");

  auto t = make(u, {0, 1});
  CHECK((s & t) == make(u, {0}));
  CHECK((s | t) == make(u, {0, 1, 2}));
  CHECK((s - t) == make(u, {2}));
  CHECK((s ^ t) == make(u, {1, 2}));
  CHECK(make(u, {0}).subset_of(t));
  CHECK(make(u, {0}).proper_subset_of(t));
  CHECK(!t.proper_subset_of(t));
}

TEST_CASE("universe mismatch raises") {
  auto u1 = abc();
  auto u2 = AttributeUniverse::make({"x", "y"});
  AttributeSet a(u1), b(u2);
  CHECK_THROWS_AS((void)a.subset_of(b), std::invalid_argument);
  CHECK_THROWS_AS(a |= b, std::invalid_argument);
  // structurally equal universes are interchangeable
  auto u3 = AttributeUniverse::make({"a", "b", "c"});
  CHECK(AttributeSet(u1) == AttributeSet(u3));
}

TEST_CASE("set ops agree with plain 64-bit masks") {
  auto names = std::vector<std::string>{};
  for (int j = 0; j < 11; ++j) names.push_back("m" + std::to_string(j));
  auto u = AttributeUniverse::make(names);
  const std::size_t n = u->size();
  fcai::Rng rng(7);
  auto from_mask = [&](std::uint64_t m) {
    AttributeSet s(u);
    for (std::size_t j = 0; j < n; ++j)
      if ((m >> j) & 1ULL) s.add(j);
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t ma = rng.next_u64() & ((1ULL << n) - 1);
    const std::uint64_t mb = rng.next_u64() & ((1ULL << n) - 1);
    AttributeSet a = from_mask(ma), b = from_mask(mb);
    CHECK((a & b) == from_mask(ma & mb));
    CHECK((a | b) == from_mask(ma | mb));
    CHECK((a - b) == from_mask(ma & ~mb));
    CHECK((a ^ b) == from_mask(ma ^ mb));
    CHECK(a.subset_of(b) == ((ma & ~mb) == 0));
    CHECK(a.count() == static_cast<std::size_t>(__builtin_popcountll(ma)));
    // lectic order is numeric order of the MSB-first counter encoding
    CHECK(a.lectic_less(b) == (a.lectic_counter() < b.lectic_counter()));
    CHECK(AttributeSet::from_counter(u, a.lectic_counter()) == a);
  }
}

TEST_CASE("multi-word universes") {
  std::vector<std::string> names;
  for (int j = 0; j < 70; ++j) names.push_back("m" + std::to_string(j));
  auto u = AttributeUniverse::make(names);
  auto s = make(u, {0, 63, 64, 69});
  CHECK(s.count() == 4);
  CHECK(AttributeSet::full(u).count() == 70);
  CHECK(s.subset_of(AttributeSet::full(u)));
  auto t = make(u, {63, 64});
  CHECK(t.proper_subset_of(s));
  CHECK((s - t) == make(u, {0, 69}));
  CHECK(t.lectic_less(s));  // smallest differing attribute (0) is in s
  CHECK(s.equal_below(t, 63) == false);
  CHECK(make(u, {64}).equal_below(make(u, {65}), 64));
}
