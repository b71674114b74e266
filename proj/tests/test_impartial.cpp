#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "spgame/impartial.hpp"
#include "spgame/rulesets.hpp"
#include "spgame/values.hpp"
#include "spgame/verify.hpp"

using namespace spg;

TEST_CASE("mex") {
  CHECK(mex(std::vector<int>{}) == 0);
  CHECK(mex(std::vector<int>{1, 2}) == 0);
  CHECK(mex(std::vector<int>{0, 2, 1, 4}) == 3);
  CHECK(mex(std::vector<int>{0, 0, 1}) == 2);
}

TEST_CASE("grundy agrees with direct search") {
  std::mt19937_64 rng(21);
  RandomComplexShape shape;
  shape.labeled = false;
  shape.max_vertices = 7;
  for (int i = 0; i < 150; ++i) {
    const Complex c = random_complex(rng, shape);
    CHECK(grundy(ImpartialComplex(c)) == oracle::grundy(oracle::facets_of(c)));
  }
}

TEST_CASE("simple impartial complexes") {
  CHECK(grundy(ImpartialComplex::parse("")) == 0);
  CHECK(grundy(ImpartialComplex::parse("a\n")) == 1);
  CHECK(grundy(ImpartialComplex::parse("a\nb\n")) == 1);
  CHECK(grundy(ImpartialComplex::parse("a b\n")) == 0);
  CHECK(grundy(ImpartialComplex::parse("a b\nc\n")) == 2);
  for (int n = 1; n <= 5; ++n) CHECK(grundy(ImpartialComplex(nim_pile_complex(n))) == n);
}

TEST_CASE("structural predictions") {
  auto p = predict_structural(ImpartialComplex::parse("a b\nc d\nb c\n"));
  REQUIRE(p);
  CHECK(p->grundy == 0);
  CHECK(p->rule == StructuralRule::AllFacetsEven);

  p = predict_structural(ImpartialComplex::parse("a b c\nb c d\n"));
  REQUIRE(p);
  CHECK(p->grundy == 1);

  p = predict_structural(ImpartialComplex::parse("a b c\nd\n"));
  REQUIRE(p);
  CHECK(p->rule == StructuralRule::DisjointPure);
  CHECK(p->grundy == grundy(ImpartialComplex::parse("a b c\nd\n")));

  CHECK_FALSE(predict_structural(ImpartialComplex::parse("a b c\nc d\n")).has_value());
  CHECK(to_string(StructuralRule::Pure) == "pure complex");
}

TEST_CASE("structural predictions hold whenever they apply") {
  std::mt19937_64 rng(22);
  int predicted = 0;
  for (int i = 0; i < 400; ++i) {
    const int v = 2 + static_cast<int>(rng() % 5);
    const int size = 1 + static_cast<int>(rng() % std::min(v, 3));
    const Complex c = random_pure_complex(rng, v, size, 1 + static_cast<int>(rng() % 4), false);
    const ImpartialComplex ic(c);
    if (auto p = predict_structural(ic)) {
      ++predicted;
      CHECK(p->grundy == oracle::grundy(oracle::facets_of(c)));
    }
  }
  CHECK(predicted >= 200);
}

TEST_CASE("doubled partizan complex evaluates to the nimber") {
  GameContext ctx;
  for (int n = 1; n <= 3; ++n) CHECK(grundy_value_crosscheck(ctx, ImpartialComplex(nim_pile_complex(n))));
  const ImpartialComplex c = ImpartialComplex::parse("a b\nc\n");
  const Complex d = doubled_partizan(c);
  CHECK(d.facets().size() == 4 + 2);
  oracle::Arena o;
  CHECK(o.equal(o.from_facets(oracle::facets_of(d)), o.nimber(2)));
}
