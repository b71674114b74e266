#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "spgame/game.hpp"
#include "spgame/values.hpp"
#include "spgame/verify.hpp"

using namespace spg;

namespace {

std::vector<Complex> corpus(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  RandomComplexShape shape;
  shape.max_vertices = 6;
  shape.max_facets = 4;
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(random_complex(rng, shape));
  return out;
}

}  // namespace

TEST_CASE("game of a complex matches the reference tree") {
  GameContext ctx;
  oracle::Arena o;
  for (const Complex& c : corpus(11, 120)) {
    const int want = o.from_facets(oracle::facets_of(c));
    CHECK(o.import(ctx, ctx.from_complex(c)) == want);
  }
}

TEST_CASE("canonical value equals the reference value") {
  GameContext ctx;
  oracle::Arena o;
  for (const Complex& c : corpus(12, 150)) {
    const int literal = o.from_facets(oracle::facets_of(c));
    const GameId v = ctx.evaluate(c);
    CHECK(o.equal(o.import(ctx, v), literal));
    CHECK(ctx.canonical(v) == v);
    CHECK(ctx.canonical(ctx.from_complex(c)) == v);
  }
}

TEST_CASE("outcome and order agree with exhaustive play") {
  GameContext ctx;
  oracle::Arena o;
  const auto cs = corpus(13, 40);
  std::vector<GameId> g;
  std::vector<int> og;
  for (const auto& c : cs) {
    g.push_back(ctx.from_complex(c));
    og.push_back(o.from_facets(oracle::facets_of(c)));
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(std::string(to_string(ctx.outcome(g[i]))) == o.outcome(og[i]));
    for (std::size_t j = 0; j < cs.size(); j += 3) CHECK(ctx.leq(g[i], g[j]) == o.leq(og[i], og[j]));
  }
}

TEST_CASE("sum and negation") {
  GameContext ctx;
  oracle::Arena o;
  const auto cs = corpus(14, 30);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    const GameId a = ctx.evaluate(cs[i]), b = ctx.evaluate(cs[i + 1]);
    const GameId s = ctx.canonical(ctx.add(a, b));
    CHECK(o.equal(o.import(ctx, s), o.sum(o.import(ctx, a), o.import(ctx, b))));
    CHECK(ctx.canonical(ctx.subtract(a, a)) == ctx.zero());
    CHECK(ctx.negate(ctx.negate(a)) == a);
  }
}

TEST_CASE("small named games") {
  GameContext ctx;
  const GameId z = ctx.zero();
  const GameId one = ctx.make({z}, {});
  const GameId star = ctx.make({z}, {z});
  const GameId up = ctx.make({z}, {star});
  CHECK(ctx.outcome(z) == Outcome::P);
  CHECK(ctx.outcome(one) == Outcome::L);
  CHECK(ctx.outcome(star) == Outcome::N);
  CHECK(ctx.outcome(up) == Outcome::L);
  CHECK(ctx.incomparable(star, z));
  CHECK(ctx.greater(up, z));
  CHECK(ctx.incomparable(up, star));
  // {0,* | 0,*} = *2 and {*|*} = 0 after bypassing
  CHECK(ctx.canonical(ctx.make({star}, {star})) == z);
  // {-1 | 1} = 0, {0, -1 | } = 1
  const GameId m1 = ctx.make({}, {z});
  CHECK(ctx.canonical(ctx.make({m1}, {one})) == z);
  CHECK(ctx.canonical(ctx.make({z, m1}, {})) == one);
}

TEST_CASE("birthdays") {
  GameContext ctx;
  const GameId z = ctx.zero();
  const GameId bloated = ctx.make({ctx.make({}, {ctx.make({z}, {})})}, {});  // { {|1} | } = {0|} = 1
  CHECK(ctx.formal_birthday(bloated) == 3);
  CHECK(ctx.birthday(bloated) == 1);
}

TEST_CASE("sp-tree check") {
  GameContext ctx;
  CHECK_FALSE(ctx.sp_tree_check(make_number(ctx, Dyadic::from_parts(-1, 1))));
  for (const Complex& c : corpus(15, 60)) CHECK(ctx.sp_tree_check(ctx.from_complex(c)));
}

TEST_CASE("deep games do not overflow the stack") {
  GameContext ctx;
  GameId g = ctx.zero();
  for (int i = 0; i < 5000; ++i) g = ctx.make({g}, {});
  CHECK(ctx.formal_birthday(g) == 5000);
  CHECK(ctx.canonical(g) == g);
  CHECK(ctx.outcome(g) == Outcome::L);
  GameContext other;
  const GameId copy = other.import(ctx, g);
  CHECK(other.formal_birthday(copy) == 5000);
  CHECK(ctx.import(other, copy) == g);
  CHECK(make_number(ctx, 64) != ctx.zero());
}

TEST_CASE("node budget") {
  EngineOptions opt;
  opt.node_budget = 8;
  GameContext ctx(opt);
  GameId g = ctx.zero();
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 100; ++i) g = ctx.make({g}, {});
      }(),
      Error);
}

TEST_CASE("disabling simplifications leaves equal but larger games") {
  EngineOptions raw;
  raw.remove_dominated = false;
  raw.bypass_reversible = false;
  GameContext plain(raw);
  GameContext full;
  oracle::Arena o;
  for (const Complex& c : corpus(16, 40)) {
    const GameId a = plain.evaluate(c);
    const GameId b = full.evaluate(c);
    CHECK(o.equal(o.import(plain, a), o.import(full, b)));
    CHECK(plain.formal_birthday(a) >= full.formal_birthday(b));
  }
}
