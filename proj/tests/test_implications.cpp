#include "doctest.h"

#include "datagen.hpp"
#include "errors.hpp"
#include "implication.hpp"
#include "support/brute.hpp"

using namespace fcai;

namespace {

AttributeSet make(const UniversePtr& u, std::initializer_list<std::size_t> bits) {
  AttributeSet s(u);
  for (auto b : bits) s.add(b);
  return s;
}

UniversePtr abc() { return AttributeUniverse::make({"a", "b", "c"}); }

AttributeSet named_set(const UniversePtr& u, std::initializer_list<const char*> names) {
  AttributeSet s(u);
  for (const char* n : names) {
    auto idx = u->index_of(n);
    REQUIRE(idx);
    s.add(*idx);
  }
  return s;
}

}  // namespace

TEST_CASE("is_model") {
  auto u = abc();
  Implication ab(make(u, {0}), make(u, {1}));  // {a} -> {b}
  CHECK(is_model(make(u, {1}), ab));           // premise not contained
  CHECK(!is_model(make(u, {0}), ab));          // premise in, conclusion out
  CHECK(is_model(make(u, {0, 1}), ab));        // conclusion contained
}

TEST_CASE("closure under an implication list") {
  auto u = abc();
  SUBCASE("one firing") {
    ImplicationList l(u);
    l.push_back(Implication(make(u, {0}), make(u, {1})));
    CHECK(closure(l, make(u, {0})) == make(u, {0, 1}));
  }
  SUBCASE("empty theory is the identity") {
    ImplicationList l(u);
    CHECK(closure(l, make(u, {0, 2})) == make(u, {0, 2}));
  }
  SUBCASE("two passes") {
    ImplicationList l(u);
    l.push_back(Implication(make(u, {0}), make(u, {1})));
    l.push_back(Implication(make(u, {1}), make(u, {2})));
    CHECK(closure(l, make(u, {0})) == AttributeSet::full(u));
  }
}

TEST_CASE("entails") {
  auto u = abc();
  ImplicationList l(u);
  SUBCASE("empty theory entails only trivial implications") {
    CHECK(!entails(l, Implication(make(u, {0}), make(u, {1}))));
    CHECK(entails(l, Implication(make(u, {0, 1}), make(u, {1}))));
  }
  SUBCASE("conclusion inside the closure") {
    l.push_back(Implication(make(u, {0}), make(u, {1})));
    CHECK(entails(l, Implication(make(u, {0}), make(u, {0, 1}))));
  }
  SUBCASE("transitivity through the fixpoint") {
    l.push_back(Implication(make(u, {0}), make(u, {1})));
    l.push_back(Implication(make(u, {1}), make(u, {2})));
    CHECK(entails(l, Implication(make(u, {0}), make(u, {2}))));
  }
}

TEST_CASE("enumerate_models") {
  SUBCASE("single implication over two attributes") {
    auto u = AttributeUniverse::make({"a", "b"});
    ImplicationList l(u);
    l.push_back(Implication(make(u, {0}), make(u, {1})));
    auto models = enumerate_models(l);
    REQUIRE(models.size() == 3);
    CHECK(models[0] == AttributeSet(u));
    CHECK(models[1] == make(u, {1}));
    CHECK(models[2] == make(u, {0, 1}));
  }
  SUBCASE("empty list: all subsets") {
    auto u = AttributeUniverse::make({"a"});
    auto models = enumerate_models(ImplicationList(u));
    REQUIRE(models.size() == 2);
    CHECK(models[0].empty());
    CHECK(models[1] == AttributeSet::full(u));
  }
  SUBCASE("global premise") {
    auto u = abc();
    ImplicationList l(u);
    l.push_back(Implication(AttributeSet(u), make(u, {0, 1})));
    auto models = enumerate_models(l);
    REQUIRE(models.size() == 2);
    CHECK(models[0] == make(u, {0, 1}));
    CHECK(models[1] == AttributeSet::full(u));
  }
}

TEST_CASE("model membership equals closure fixpoint") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = brute::random_universe(rng, 1, 6);
    ImplicationList l = brute::random_list(rng, u, 6);
    auto models = enumerate_models(l);
    std::size_t seen = 0;
    for (auto& x : brute::all_subsets(u)) {
      const bool fixed = closure(l, x) == x;
      const bool listed = seen < models.size() && models[seen] == x;
      CHECK(fixed == listed);
      if (listed) ++seen;
    }
    CHECK(seen == models.size());
  }
}

TEST_CASE("closure laws for implication closure") {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    auto u = brute::random_universe(rng, 1, 10);
    ImplicationList l = brute::random_list(rng, u, 8);
    AttributeSet a = brute::random_set(rng, u);
    AttributeSet b = brute::random_set(rng, u);
    AttributeSet closed = closure(l, a);
    CHECK(a.subset_of(closed));
    CHECK(closure(l, closed) == closed);
    CHECK(closure(l, a & b).subset_of(closed));
  }
}

TEST_CASE("is_valid_in") {
  const FormalContext sa = star_alliance();
  auto u = sa.universe();
  SUBCASE("first canonical implication of the case study") {
    Implication imp(
        named_set(u, {"Africa", "Asia Pacific", "Europe", "United States", "Canada"}),
        named_set(u, {"Middle East"}));
    CHECK(is_valid_in(sa, imp));
  }
  SUBCASE("the seven-region falsum implication is refuted only by Lufthansa") {
    Implication seven(named_set(u, {"Africa", "Latin America", "Asia Pacific", "Mexico",
                                    "Europe", "United States", "Canada"}),
                      AttributeSet::full(u));
    CHECK(!is_valid_in(sa, seven));
    std::vector<std::string> refuters;
    for (std::size_t g = 0; g < sa.object_count(); ++g)
      if (!is_model(sa.row(g), seven)) refuters.push_back(sa.object_label(g));
    CHECK(refuters == std::vector<std::string>{"Lufthansa"});
  }
  SUBCASE("reflexivity") {
    auto x = named_set(u, {"Europe", "Mexico"});
    CHECK(is_valid_in(sa, Implication(x, x)));
  }
}

TEST_CASE("canonical_basis") {
  SUBCASE("Star-Alliance has 13 implications") {
    CHECK(canonical_basis(star_alliance()).size() == 13);
  }
  SUBCASE("single object: only pseudo-intent is the empty set") {
    auto u = abc();
    FormalContext ctx(u, {"g1"}, {make(u, {0, 1})});
    auto basis = canonical_basis(ctx);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].premise == AttributeSet(u));
    CHECK(basis[0].conclusion == make(u, {0, 1}));
  }
  SUBCASE("power-set context has an empty basis") {
    auto u = AttributeUniverse::make({"a", "b"});
    std::vector<std::string> labels{"g1", "g2", "g3", "g4"};
    std::vector<AttributeSet> rows{AttributeSet(u), make(u, {0}), make(u, {1}), make(u, {0, 1})};
    CHECK(canonical_basis(FormalContext(u, labels, rows)).empty());
  }
}

TEST_CASE("canonical basis matches the definitional pseudo-intent scan") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto u = brute::random_universe(rng, 1, 7);
    FormalContext ctx = brute::random_context(rng, u, 10);
    auto basis = canonical_basis(ctx);
    auto expected = brute::pseudo_intents(ctx);
    REQUIRE(basis.size() == expected.size());
    // same premises and conclusions, as sets
    for (const auto& [p, pc] : expected) {
      bool found = false;
      for (const auto& imp : basis)
        if (imp.premise == p && imp.conclusion == pc) found = true;
      CHECK(found);
    }
    // premises in lectic order, pairwise distinct, never closed
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].premise != basis[i].conclusion);
      CHECK(ctx.close_attributes(basis[i].premise) == basis[i].conclusion);
      if (i > 0) CHECK(basis[i - 1].premise.lectic_less(basis[i].premise));
    }
  }
}

TEST_CASE("canonical basis is sound and complete: Mod(Can) = Int") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto u = brute::random_universe(rng, 1, 8);
    FormalContext ctx = brute::random_context(rng, u, 12);
    auto basis = canonical_basis(ctx);
    auto models = brute::models(basis);
    auto intents = brute::intents(ctx);
    REQUIRE(models.size() == intents.size());
    for (std::size_t i = 0; i < models.size(); ++i) CHECK(models[i] == intents[i]);
  }
}

TEST_CASE("canonical basis is no larger than the all-implications basis") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto u = brute::random_universe(rng, 1, 5);
    FormalContext ctx = brute::random_context(rng, u, 8);
    // {P -> P'' : P not closed} is sound and complete but redundant
    ImplicationList everything(u);
    for (auto& p : brute::all_subsets(u)) {
      auto closed = brute::close(ctx, p);
      if (closed != p) everything.push_back(Implication(p, closed));
    }
    auto basis = canonical_basis(ctx);
    CHECK(basis.size() <= everything.size());
    if (!everything.empty()) CHECK(equivalent(basis, everything));
  }
}

TEST_CASE("every object row models every implication valid in its context") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    auto u = brute::random_universe(rng, 1, 8);
    FormalContext ctx = brute::random_context(rng, u, 10);
    AttributeSet premise = brute::random_set(rng, u);
    Implication valid(premise, ctx.close_attributes(premise));
    REQUIRE(is_valid_in(ctx, valid));
    for (std::size_t g = 0; g < ctx.object_count(); ++g) CHECK(is_model(ctx.row(g), valid));
    // and an arbitrary implication is valid exactly when all rows model it
    Implication any(premise, brute::random_set(rng, u));
    bool all_rows = true;
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
      if (!is_model(ctx.row(g), any)) all_rows = false;
    CHECK(is_valid_in(ctx, any) == all_rows);
  }
}

TEST_CASE("equivalent") {
  auto u = AttributeUniverse::make({"a", "b"});
  ImplicationList l1(u), l2(u), l3(u);
  l1.push_back(Implication(make(u, {0}), make(u, {1})));
  l2.push_back(Implication(make(u, {0}), make(u, {0, 1})));
  CHECK(equivalent(l1, l2));
  l3.push_back(Implication(AttributeSet(u), make(u, {0})));
  CHECK(!equivalent(ImplicationList(u), l3));
}

TEST_CASE("implication text format") {
  const FormalContext sa = star_alliance();
  auto u = sa.universe();
  SUBCASE("conclusion prints minus the premise") {
    Implication imp(named_set(u, {"Europe"}), named_set(u, {"Europe", "Canada"}));
    CHECK(format_implication(imp) == "Europe -> Canada");
  }
  SUBCASE("empty premise and falsum") {
    Implication bottom(named_set(u, {"Caribbean"}), AttributeSet::full(u));
    CHECK(format_implication(bottom) == "Caribbean -> ⊥");
    Implication top(AttributeSet(u), named_set(u, {"Europe"}));
    CHECK(format_implication(top) == "{} -> Europe");
  }
  SUBCASE("round trip through text") {
    auto basis = canonical_basis(sa);
    auto parsed = parse_implications(u, format_implications(basis));
    REQUIRE(parsed.size() == basis.size());
    CHECK(equivalent(parsed, basis));
  }
  SUBCASE("falsum and comment lines parse") {
    auto list = parse_implications(u, "# comment\nCaribbean -> ⊥\n\n{} -> Europe\n");
    REQUIRE(list.size() == 2);
    CHECK(list[0].conclusion == AttributeSet::full(u));
    CHECK(list[1].premise.empty());
  }
  SUBCASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_implications(u, "Europe -> Planet X"),
                         doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_implications(u, "Europe -> Canada\nno arrow here\n"),
                         doctest::Contains("line 2"), ParseError);
  }
}
