#include "doctest.h"

#include <fstream>
#include <sstream>

#include "context.hpp"
#include "context_io.hpp"
#include "datagen.hpp"
#include "errors.hpp"
#include "support/brute.hpp"
#include "test_paths.h"

using namespace fcai;

namespace {

AttributeSet make(const UniversePtr& u, std::initializer_list<std::size_t> bits) {
  AttributeSet s(u);
  for (auto b : bits) s.add(b);
  return s;
}

// one object {a,b} over {a,b,c}
FormalContext one_object_ctx() {
  auto u = AttributeUniverse::make({"a", "b", "c"});
  return FormalContext(u, {"g1"}, {make(u, {0, 1})});
}

AttributeSet named_set(const FormalContext& ctx, std::initializer_list<const char*> names) {
  AttributeSet s(ctx.universe());
  for (const char* n : names) {
    auto idx = ctx.universe()->index_of(n);
    REQUIRE(idx);
    s.add(*idx);
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("derive_objects") {
  const FormalContext sa = star_alliance();
  SUBCASE("Caribbean fliers in the Star-Alliance context") {
    auto objs = sa.derive_objects(named_set(sa, {"Caribbean"}));
    std::vector<std::string> labels;
    for (auto g : objs) labels.push_back(sa.object_label(g));
    CHECK(labels == std::vector<std::string>{"Air Canada", "Mexicana",
                                             "Thai Airways International", "United Airlines"});
  }
  SUBCASE("empty premise selects every object") {
    CHECK(sa.derive_objects(AttributeSet(sa.universe())).size() == sa.object_count());
  }
  SUBCASE("attribute held by no object") {
    const FormalContext ctx = one_object_ctx();
    CHECK(ctx.derive_objects(make(ctx.universe(), {2})).empty());
  }
  SUBCASE("universe mismatch") {
    auto other = AttributeUniverse::make({"x"});
    CHECK_THROWS_AS(sa.derive_objects(AttributeSet(other)), std::invalid_argument);
  }
}

TEST_CASE("close_attributes") {
  const FormalContext ctx = one_object_ctx();
  CHECK(ctx.close_attributes(AttributeSet(ctx.universe())) == make(ctx.universe(), {0, 1}));
  SUBCASE("idempotent on an intent") {
    auto intent = ctx.close_attributes(make(ctx.universe(), {0}));
    CHECK(ctx.close_attributes(intent) == intent);
  }
  SUBCASE("no witness row gives M") {
    CHECK(ctx.close_attributes(make(ctx.universe(), {2})) ==
          AttributeSet::full(ctx.universe()));
  }
  SUBCASE("empty object list gives M for every set") {
    auto u = AttributeUniverse::make({"a"});
    FormalContext empty(u, {}, {});
    CHECK(empty.close_attributes(AttributeSet(u)) == AttributeSet::full(u));
  }
}

TEST_CASE("is_intent") {
  const FormalContext sa = star_alliance();
  auto lufthansa = sa.row(6);
  REQUIRE(sa.object_label(6) == "Lufthansa");
  CHECK(sa.is_intent(lufthansa));
  // seven regions that only Lufthansa's row extends, and strictly so
  auto seven_regions = named_set(sa, {"Africa", "Latin America", "Asia Pacific", "Mexico",
                                      "Europe", "United States", "Canada"});
  CHECK(!sa.is_intent(seven_regions));
  CHECK(sa.is_intent(AttributeSet::full(sa.universe())));
}

TEST_CASE("enumerate_intents") {
  SUBCASE("one object") {
    const FormalContext ctx = one_object_ctx();
    auto intents = enumerate_intents(ctx);
    REQUIRE(intents.size() == 2);
    CHECK(intents[0] == make(ctx.universe(), {0, 1}));
    CHECK(intents[1] == AttributeSet::full(ctx.universe()));
  }
  SUBCASE("no objects: only M is closed") {
    auto u = AttributeUniverse::make({"a"});
    auto intents = enumerate_intents(FormalContext(u, {}, {}));
    REQUIRE(intents.size() == 1);
    CHECK(intents[0] == AttributeSet::full(u));
  }
  SUBCASE("Star-Alliance count matches the exhaustive scan") {
    const FormalContext sa = star_alliance();
    auto intents = enumerate_intents(sa);
    CHECK(intents.size() == brute::intents(sa).size());
    CHECK(intents.size() == 26);
    CHECK(intents.back() == AttributeSet::full(sa.universe()));
  }
  SUBCASE("cap exceeded") {
    std::vector<std::string> names;
    for (int j = 0; j < 25; ++j) names.push_back("m" + std::to_string(j));
    auto u = AttributeUniverse::make(names);
    FormalContext big(u, {}, {});
    CHECK_THROWS_WITH_AS(enumerate_intents(big),
                         doctest::Contains("enumeration cap 24"), CapacityError);
    CHECK(enumerate_intents(big, 25).size() == 1);  // cap is configurable
  }
}

TEST_CASE("intents equal the is_intent scan, in lectic order") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto u = brute::random_universe(rng, 1, 6);
    FormalContext ctx = brute::random_context(rng, u, 8);
    auto intents = enumerate_intents(ctx);
    auto expected = brute::intents(ctx);
    REQUIRE(intents.size() == expected.size());
    for (std::size_t i = 0; i < intents.size(); ++i) CHECK(intents[i] == expected[i]);
    for (std::size_t i = 1; i < intents.size(); ++i)
      CHECK(intents[i - 1].lectic_less(intents[i]));
  }
}

TEST_CASE("closure laws for the context closure") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto u = brute::random_universe(rng, 1, 10);
    FormalContext ctx = brute::random_context(rng, u, 10);
    AttributeSet a = brute::random_set(rng, u);
    AttributeSet b = brute::random_set(rng, u);
    AttributeSet closed = ctx.close_attributes(a);
    CHECK(a.subset_of(closed));                              // extensive
    CHECK(ctx.close_attributes(closed) == closed);           // idempotent
    AttributeSet sub = a & b;                                // sub is a subset of a
    CHECK(ctx.close_attributes(sub).subset_of(closed));      // monotone
  }
}

TEST_CASE("Burmeister parsing") {
  SUBCASE("minimal well-formed file") {
    FormalContext ctx = parse_context("B\n\n1\n2\n\ng1\na\nb\nXX\n", ContextFormat::Burmeister);
    CHECK(ctx.object_count() == 1);
    CHECK(ctx.attribute_count() == 2);
    CHECK(ctx.row(0) == AttributeSet::full(ctx.universe()));
  }
  SUBCASE("row of wrong length") {
    CHECK_THROWS_WITH_AS(parse_context("B\n\n1\n2\n\ng1\na\nb\nX\n", ContextFormat::Burmeister),
                         doctest::Contains("line 9"), ParseError);
  }
  SUBCASE("bad header") {
    CHECK_THROWS_AS(parse_context("C\n\n0\n0\n\n", ContextFormat::Burmeister), ParseError);
  }
  SUBCASE("duplicate object labels") {
    CHECK_THROWS_AS(
        parse_context("B\n\n2\n1\n\ng\ng\na\nX\nX\n", ContextFormat::Burmeister), ParseError);
  }
  SUBCASE("bad incidence character") {
    CHECK_THROWS_AS(parse_context("B\n\n1\n1\n\ng\na\n?\n", ContextFormat::Burmeister),
                    ParseError);
  }
  SUBCASE("bundled star-alliance.cxt") {
    const std::string text = read_file(std::string(TEST_DATA_DIR) + "/star-alliance.cxt");
    FormalContext ctx = parse_context(text, ContextFormat::Burmeister);
    CHECK(ctx.object_count() == 13);
    CHECK(ctx.attribute_count() == 9);
    // bit-exact round trip with the bundled file
    CHECK(write_context(ctx, ContextFormat::Burmeister) == text);
    // and the embedded copy is the same context
    const FormalContext embedded = star_alliance();
    REQUIRE(same_universe(ctx.universe(), embedded.universe()));
    for (std::size_t g = 0; g < 13; ++g) {
      CHECK(ctx.object_label(g) == embedded.object_label(g));
      CHECK(ctx.row(g) == embedded.row(g));
    }
  }
}

TEST_CASE("context round trips") {
  auto u = AttributeUniverse::make({"a", "b"});
  const FormalContext one(u, {"g1"}, {make(u, {1})});
  const FormalContext none(u, {}, {});
  for (auto format : {ContextFormat::Burmeister, ContextFormat::CsvBinary}) {
    for (const FormalContext* ctx : {&one, &none}) {
      const std::string text = write_context(*ctx, format);
      FormalContext back = parse_context(text, format);
      REQUIRE(back.object_count() == ctx->object_count());
      REQUIRE(back.attribute_count() == ctx->attribute_count());
      for (std::size_t g = 0; g < back.object_count(); ++g) {
        CHECK(back.object_label(g) == ctx->object_label(g));
        CHECK(back.row(g) == ctx->row(g));
      }
      CHECK(write_context(back, format) == text);
    }
  }
  CHECK(write_context(none, ContextFormat::Burmeister).substr(0, 6) == "B\n\n0\n2");
}

TEST_CASE("csv parsing errors") {
  CHECK_THROWS_AS(parse_context("", ContextFormat::CsvBinary), ParseError);
  CHECK_THROWS_WITH_AS(parse_context(",a,b\ng1,1\n", ContextFormat::CsvBinary),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_context(",a,b\ng1,1,2\n", ContextFormat::CsvBinary), ParseError);
}

TEST_CASE("format guessing") {
  CHECK(guess_format("foo.cxt") == ContextFormat::Burmeister);
  CHECK(guess_format("foo.csv") == ContextFormat::CsvBinary);
  CHECK(guess_format("B\n\n0\n0\n\n") == ContextFormat::Burmeister);
}
