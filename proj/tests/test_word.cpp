#include <random>

#include "doctest.h"
#include "moufang/catalog.hpp"
#include "moufang/word.hpp"

using namespace moufang;

namespace {

constexpr Letter x = Letter::x;
constexpr Letter y = Letter::y;

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), exp(-3, 3), coin(0, 1);
  std::vector<Syllable> raw;
  for (int i = len(rng); i > 0; --i) raw.push_back({coin(rng) ? x : y, exp(rng)});
  return Word::reduce(raw);
}

}  // namespace

TEST_CASE("reduce_word") {
  CHECK(Word::reduce({{x, 1}, {x, 1}, {y, -1}}).str() == "x^2y^-1");
  CHECK(Word::reduce({{x, 1}, {y, 2}, {y, -2}, {x, -1}}).empty());
  CHECK(Word::reduce({{x, 2}, {y, 1}, {y, -1}, {x, 1}}) == X(3));
  CHECK(Word::reduce({{x, 0}, {y, 0}}).empty());
}

TEST_CASE("complexity") {
  CHECK(Word{}.complexity() == Complexity{0, 0});
  CHECK(Word::parse("x^2y^-1").complexity() == Complexity{2, 3});
  CHECK(Word::parse("xyx^-1y").complexity() == Complexity{4, 4});
  CHECK(Complexity{2, 9} < Complexity{3, 0});
  CHECK(Complexity{2, 2} < Complexity{2, 3});
}

TEST_CASE("parsing") {
  CHECK(Word::parse("x^2y^-1x").str() == "x^2y^-1x");
  CHECK(Word::parse(" x ^ 2 y ") == Word::parse("x^2y"));
  CHECK(Word::parse("(xy)^2").str() == "xyxy");
  CHECK(Word::parse("(xy)^-1") == Word::parse("y^-1x^-1"));
  CHECK(Word::parse("e").empty());
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("xz"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("(xy"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("x^"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("x)"), WordSyntaxError);
}

TEST_CASE("relator lists") {
  const auto r = parse_relators("x^2; y^3 ;(xy)^2;");
  REQUIRE(r.size() == 3);
  CHECK(r[2].str() == "xyxy");
  const auto eq = parse_relators("xyx=y^-1");
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].str() == "xyxy");
}

TEST_CASE("evaluate_word") {
  const Group s3 = catalog("symmetric3");
  CHECK(evaluate_word(s3, Word{}) == s3.identity());
  CHECK(evaluate_word(s3, X(2)) == s3.identity());
  CHECK(evaluate_word(s3, X() * Y() * X()) == s3.inv(s3.gen_y()));
  CHECK(evaluate_word(s3, Word::parse("xyxy")) == s3.identity());
}

TEST_CASE("check_relations") {
  const Group s3 = catalog("symmetric3");
  CHECK(check_relations(s3, parse_relators("x^2;y^3;(xy)^2")));
  CHECK_FALSE(check_relations(s3, parse_relators("y^2")));
  CHECK(check_relations(catalog("dihedral", 4), parse_relators("x^2;y^4;(xy)^2")));
}

TEST_CASE("word properties") {
  std::mt19937 rng(11);
  const Group d6 = catalog("dihedral", 6);
  for (int i = 0; i < 300; ++i) {
    const Word a = random_word(rng, 6), b = random_word(rng, 6);
    // idempotent reduction
    CHECK(Word::reduce(a.syllables()) == a);
    // reduced form invariants
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].exponent != 0);
      if (k + 1 < a.size()) CHECK(a[k].letter != a[k + 1].letter);
    }
    // evaluation is a homomorphism
    CHECK(evaluate_word(d6, a * b) == d6.mul(evaluate_word(d6, a), evaluate_word(d6, b)));
    CHECK((a * a.inverse()).empty());
    CHECK(Word::parse(a.str()) == a);
  }
}

TEST_CASE("complexity decreases when a syllable is removed or shortened") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 7);
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::vector<Syllable> dropped(w.syllables());
      dropped.erase(dropped.begin() + static_cast<long>(k));
      CHECK(Word::reduce(dropped).complexity() < w.complexity());

      std::vector<Syllable> shorter(w.syllables());
      shorter[k].exponent += shorter[k].exponent > 0 ? -1 : 1;
      CHECK(Word::reduce(shorter).complexity() < w.complexity());
    }
  }
}
