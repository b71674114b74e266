#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "spgame/complex.hpp"

using namespace spg;

namespace {

Complex C(std::vector<std::vector<std::string>> f) { return Complex::from_names(f); }

std::vector<std::string> names(const Complex& c) {
  std::vector<std::string> out;
  for (const auto& v : c.vertices()) out.push_back(v.name);
  return out;
}

}  // namespace

TEST_CASE("normalization keeps maximal faces only") {
  const Complex c = C({{"x1"}, {"x1", "y1"}, {"y1"}, {"x2"}});
  CHECK(c.facets().size() == 2);
  CHECK(c.serialize() == "x2\nx1 y1\n");
  CHECK(oracle::facets_of(c) == oracle::facets_of({{"x1", "y1"}, {"x2"}}));
  CHECK(c.dimension() == 1);
  CHECK_FALSE(c.is_pure());
}

TEST_CASE("labels come from the name prefix") {
  const Complex c = C({{"x1", "y1"}});
  CHECK(c.vertex(*c.find("x1")).label == Label::Left);
  CHECK(c.vertex(*c.find("y1")).label == Label::Right);
  CHECK_THROWS_AS(C({{"z1"}}), ParseError);
}

TEST_CASE("empty complex and the complex of the empty face are both terminal") {
  const Complex none = Complex::parse("");
  const Complex empty_face = Complex::parse("()\n");
  CHECK(none.is_terminal());
  CHECK(empty_face.is_terminal());
  CHECK(none.dimension() == -1);
  CHECK(empty_face.dimension() == -1);
  CHECK(Complex::parse(empty_face.serialize()) == empty_face);
}

TEST_CASE("parse and serialize round trip") {
  const std::string text = "# comment\nvertices: x1 x2 y1 y9\n\nx1 y1   # trailing\nx2\n";
  const Complex c = Complex::parse(text);
  CHECK(names(c) == std::vector<std::string>{"x1", "x2", "y1", "y9"});
  CHECK(c.support().size() == 3);
  const std::string s = c.serialize();
  CHECK(s == "vertices: x1 x2 y1 y9\nx2\nx1 y1\n");
  CHECK(Complex::parse(s) == c);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    Complex::parse("x1 y1\n\nx1 q2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(Complex::parse("vertices: x1\nvertices: x2\n"), ParseError);
  CHECK_THROWS_AS(Complex::parse("x1 ()\n"), ParseError);
}

TEST_CASE("impartial mode accepts any names") {
  const Complex c = Complex::parse("a b\nc\n", Ownership::Impartial);
  CHECK(c.is_impartial());
  CHECK(c.vertex(*c.find("a")).label == Label::None);
}

TEST_CASE("link") {
  const Complex c = C({{"x1", "y1", "x2"}, {"x1", "y2"}, {"y3"}});
  auto l = c.link("x1");
  REQUIRE(l);
  CHECK(l->serialize().find("x2 y1") != std::string::npos);
  CHECK(oracle::facets_of(*l) == oracle::facets_of({{"x2", "y1"}, {"y2"}}));
  auto t = c.link("y3");
  REQUIRE(t);
  CHECK(t->is_terminal());
  CHECK_THROWS_AS(c.link("x7"), Error);
  const Complex with_isolated = Complex::parse("vertices: x1 x5\nx1\n");
  CHECK_FALSE(with_isolated.link("x5").has_value());
}

TEST_CASE("join is the facet-wise union and rejects shared names") {
  const Complex a = C({{"x1"}, {"y1"}});
  const Complex b = C({{"x2", "y2"}});
  const Complex j = join(a, b);
  CHECK(oracle::facets_of(j) == oracle::facets_of({{"x1", "x2", "y2"}, {"y1", "x2", "y2"}}));
  CHECK_THROWS_AS(join(a, a), Error);
  const auto factors = join_factors(j);
  CHECK(factors.size() == 3);
  CHECK(join_factors(Complex::parse("")).empty());
}

TEST_CASE("negation swaps owners and is an involution") {
  const Complex c = C({{"x1", "y1"}, {"x2"}});
  const Complex n = c.negate_labels();
  CHECK(oracle::facets_of(n) == oracle::facets_of({{"y1", "x1"}, {"y2"}}));
  CHECK(n.negate_labels() == c);
}

TEST_CASE("renaming keeps owners") {
  const Complex r = C({{"x1", "y2"}}).renamed("7");
  CHECK(names(r) == std::vector<std::string>{"x7_1", "y7_2"});
  const Complex imp = Complex::parse("a b\n", Ownership::Impartial).renamed("t");
  CHECK(names(imp) == std::vector<std::string>{"t_a", "t_b"});
}

TEST_CASE("connected components") {
  const Complex c = C({{"x1", "y1"}, {"y1", "x2"}, {"x3"}, {"y4", "y5"}});
  CHECK(connected_components(c).size() == 3);
  CHECK(connected_components(C({{"x1"}})).size() == 1);
}

TEST_CASE("unlabeled drops labels but keeps faces") {
  const Complex c = C({{"x1", "y1"}});
  const Complex u = c.unlabeled();
  CHECK(u.is_impartial());
  CHECK(u.serialize() == c.serialize());
  CHECK_FALSE(u == c);
}
