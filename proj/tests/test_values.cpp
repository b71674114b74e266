#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "spgame/values.hpp"

using namespace spg;

namespace {

Dyadic D(std::int64_t p, int q = 0) { return Dyadic::from_parts(p, q); }

std::string machine(GameContext& ctx, GameId g) { return render_value(recognize(ctx, g), RenderStyle::Machine); }
std::string pretty(GameContext& ctx, GameId g) { return render_value(recognize(ctx, g), RenderStyle::Pretty); }

}  // namespace

TEST_CASE("dyadic arithmetic") {
  CHECK(D(6, 2) == D(3, 1));
  CHECK(D(3, 1).numerator() == 3);
  CHECK(D(3, 1).exponent() == 1);
  CHECK(D(1, 1) + D(1, 2) == D(3, 2));
  CHECK(D(-5, 1).floor() == -3);
  CHECK(D(-5, 1).ceil() == -2);
  CHECK(D(5, 2).floor() == 1);
  CHECK(D(1, 3) < D(1, 2));
  CHECK((-D(3, 2)) == D(-3, 2));
  CHECK(D(5, 1).to_string() == "2+1/2");
  CHECK(D(-5, 1).to_string() == "-2-1/2");
  CHECK(D(-1, 2).to_string() == "-1/4");
  CHECK(D(5, 1).to_fraction_string() == "5/2");
  CHECK_THROWS_AS(D(1, 63), Error);
}

TEST_CASE("simplest number between") {
  CHECK(simplest_between(D(-3), D(5)) == D(0));
  CHECK(simplest_between(D(2), D(7)) == D(3));
  CHECK(simplest_between(D(-7), D(-2)) == D(-3));
  CHECK(simplest_between(D(0), D(1)) == D(1, 1));
  CHECK(simplest_between(D(1, 2), D(1, 1)) == D(3, 3));
  CHECK(simplest_between(D(1, 2), D(1)) == D(1, 1));
  CHECK(simplest_between(D(1, 1), D(3, 1)) == D(1));
  CHECK_THROWS_AS(simplest_between(D(1), D(1)), Error);
}

TEST_CASE("named builders agree with textbook definitions") {
  GameContext ctx;
  oracle::Arena o;
  for (int p = -9; p <= 9; ++p)
    for (int q = 0; q <= 3; ++q)
      CHECK(o.equal(o.import(ctx, make_number(ctx, D(p, q))), o.dyadic(p, q)));
  for (int n = 0; n <= 6; ++n) CHECK(o.equal(o.import(ctx, make_nimber(ctx, n)), o.nimber(n)));
  CHECK(o.equal(o.import(ctx, make_up_star(ctx, 1, 0)), o.up()));
  CHECK(o.equal(o.import(ctx, make_up_star(ctx, -2, 1)), o.sum(o.sum(o.down(), o.down()), o.star())));
  CHECK(o.equal(o.import(ctx, make_switch(ctx, D(3), D(-1, 1))), o.sw(o.integer(3), o.dyadic(-1, 1))));
  CHECK(o.equal(o.import(ctx, make_tiny(ctx, D(2))), o.tiny(o.integer(2))));
  CHECK(o.equal(o.import(ctx, make_miny(ctx, D(2))), o.neg(o.tiny(o.integer(2)))));
  CHECK_THROWS_AS(make_switch(ctx, D(0), D(0)), Error);
  CHECK_THROWS_AS(make_tiny(ctx, D(0)), Error);
}

TEST_CASE("builders return canonical forms") {
  GameContext ctx;
  for (GameId g : {make_number(ctx, D(7, 3)), make_nimber(ctx, 5), make_up_star(ctx, 3, 2),
                   make_switch(ctx, D(2), D(-1)), make_tiny(ctx, D(1, 1))})
    CHECK(ctx.is_canonical(g));
}

TEST_CASE("recognition and rendering") {
  GameContext ctx;
  CHECK(machine(ctx, ctx.zero()) == "0");
  CHECK(machine(ctx, make_number(ctx, D(-3, 2))) == "-3/4");
  CHECK(machine(ctx, make_number(ctx, D(5, 1))) == "2+1/2");
  CHECK(machine(ctx, make_nimber(ctx, 1)) == "*");
  CHECK(machine(ctx, make_nimber(ctx, 3)) == "*3");
  CHECK(machine(ctx, make_up_star(ctx, 1, 0)) == ".^");
  CHECK(machine(ctx, make_up_star(ctx, -1, 1)) == ".v*");
  CHECK(machine(ctx, make_up_star(ctx, 2, 0)) == "2.^");
  CHECK(machine(ctx, ctx.add(make_number(ctx, D(1)), make_nimber(ctx, 1))) == "1*");
  CHECK(machine(ctx, make_switch(ctx, D(1), D(-1))) == "{1|-1}");
  CHECK(pretty(ctx, make_switch(ctx, D(1), D(-1))) == "{1|-1} = 0±1");
  CHECK(pretty(ctx, make_switch(ctx, D(3), D(1))) == "{3|1} = 2±1");
  CHECK(machine(ctx, make_tiny(ctx, D(2))) == "+_2");
  CHECK(machine(ctx, make_miny(ctx, D(1))) == "-_1");
  const GameId odd = parse_game(ctx, "{1|*}");
  CHECK(machine(ctx, odd) == "L:{1|*}");
  CHECK(std::holds_alternative<LiteralValue>(recognize(ctx, odd)));
}

TEST_CASE("recognition is sound") {
  GameContext ctx;
  const std::vector<std::string> exprs{"0",   "5/8", "-2",        "*7",       "^*", "v",      "{2|-1}",
                                       "{0|{0|-3}}", "{{1|0}|0}", "{1|0,*}", "3^", "1/2*", "{{2|0}|-1}"};
  for (const auto& e : exprs) {
    const GameId g = ctx.canonical(parse_game(ctx, e));
    CHECK_MESSAGE(make_value(ctx, recognize(ctx, g)) == g, e);
  }
}

TEST_CASE("stops") {
  GameContext ctx;
  const GameId s = make_switch(ctx, D(3), D(-1));
  CHECK(*left_stop(ctx, s) == D(3));
  CHECK(*right_stop(ctx, s) == D(-1));
  CHECK(*left_stop(ctx, make_up_star(ctx, 1, 1)) == D(0));
  CHECK(*number_value(ctx, make_number(ctx, D(3, 2))) == D(3, 2));
  CHECK_FALSE(number_value(ctx, make_nimber(ctx, 1)).has_value());
}

TEST_CASE("parser") {
  GameContext ctx;
  CHECK(parse_game(ctx, " { 0 , * | } ") == ctx.make({ctx.zero(), make_nimber(ctx, 1)}, {}));
  CHECK(parse_game(ctx, "-1/4") == make_number(ctx, D(-1, 2)));
  CHECK(parse_game(ctx, "*0") == ctx.zero());
  CHECK(ctx.equal(parse_game(ctx, "1^*"), ctx.add(make_number(ctx, D(1)), make_up_star(ctx, 1, 1))));
  CHECK_THROWS_AS(parse_game(ctx, "{1|"), ParseError);
  CHECK_THROWS_AS(parse_game(ctx, "1/3"), ParseError);
  CHECK_THROWS_AS(parse_game(ctx, "{1}"), ParseError);
  CHECK_THROWS_AS(parse_game(ctx, "0 0"), ParseError);
}

TEST_CASE("pretty bracket") {
  GameContext ctx;
  const GameId g = ctx.make({make_number(ctx, D(1, 1))}, {make_nimber(ctx, 2), ctx.zero()});
  CHECK(to_pretty_bracket(ctx, g) == "{1/2|*2,0}");
  CHECK(ctx.to_bracket(make_nimber(ctx, 1)) == "{{|}|{|}}");
}
