#include "spgame/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "spgame/census.hpp"
#include "spgame/constructions.hpp"
#include "spgame/impartial.hpp"
#include "spgame/rulesets.hpp"
#include "spgame/values.hpp"

namespace spg {

namespace {

// keeps a mutated engine from exhausting memory
constexpr std::size_t kCheckNodeBudget = 4'000'000;

struct Outcome3 {
  std::string expected;
  std::string got;
  bool correct = false;
};

CheckResult timed(std::string id, std::string name, double limit, const std::function<Outcome3()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome3 o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.got = std::string("error: ") + e.what();
    o.correct = false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(id), std::move(name), std::move(o.expected), std::move(o.got), o.correct, secs, limit};
}

std::string one_line(const Complex& c) {
  std::string s = "<";
  bool first_facet = true;
  for (const Face& f : c.facets()) {
    s += first_facet ? "{" : ",{";
    first_facet = false;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + c.vertex(f[i]).name;
    s += "}";
  }
  return s + ">";
}

/// Compares games from the engine under test against reference values.
class Judge {
 public:
  explicit Judge(const EngineOptions& engine) : ctx(engine) {}

  GameContext ctx;  // engine under test
  GameContext ref;  // default engine, source of expected values

  bool same(GameId got, GameId expected) { return ref.import(ctx, got) == expected; }

  std::string name(GameId expected) { return render_value(recognize(ref, expected)); }

  /// Value of a game from the engine under test, flagged when its form is
  /// not the reference canonical form.
  std::string describe(GameId got) {
    const GameId imported = ref.import(ctx, got);
    std::string s = render_value(recognize(ref, imported));
    if (ref.canonical(imported) != imported) s += " [non-canonical form]";
    return s;
  }
};

struct Tally {
  int cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures.size() < 4) failures.push_back(what());
    if (!ok) ++failed;
  }
  int failed = 0;

  Outcome3 result(std::string expected) const {
    std::string got = std::to_string(cases - failed) + "/" + std::to_string(cases) + " hold";
    for (const auto& f : failures) got += "; " + f;
    if (failed > static_cast<int>(failures.size())) got += "; ...";
    return {std::move(expected), std::move(got), failed == 0 && cases > 0};
  }
};

std::vector<std::vector<Vertex>> faces_of(const Complex& c) {
  std::vector<std::vector<Vertex>> out;
  for (const Face& f : c.facets()) {
    std::vector<Vertex> face;
    for (VertexIndex v : f) face.push_back(c.vertex(v));
    out.push_back(std::move(face));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Individual claims

CheckResult snort_fixture() {
  return timed("1", "Snort on path:3 has the reference P3 facets", 0.001, [] {
    const Complex expected =
        Complex::from_names({{"x1", "y2", "x3"}, {"y1", "x2", "y3"}, {"x1", "y3"}, {"x3", "y1"}});
    const Complex got = snort_complex(Board::path(3));
    return Outcome3{one_line(expected), one_line(got), got == expected};
  });
}

CheckResult col_matches_example() {
  return timed("1b", "Col on path:3 has the reference P3 facets", 0.001, [] {
    const Complex expected =
        Complex::from_names({{"x1", "y2", "x3"}, {"y1", "x2", "y3"}, {"x1", "y3"}, {"x3", "y1"}});
    const Complex got = col_complex(Board::path(3));
    return Outcome3{one_line(expected), one_line(got), got == expected};
  });
}

CheckResult catalog_check(const EngineOptions& engine) {
  return timed("2", "birthday-2 catalog and negated twins", 1.0, [&] {
    Judge j(engine);
    Tally t;
    for (const auto& e : birthday2_catalog()) {
      const GameId got = j.ctx.evaluate(e.complex);
      const GameId want = expected_value(j.ref, e);
      t.check(j.same(got, want), [&] { return e.name + " gave " + j.describe(got) + ", want " + j.name(want); });
    }
    return t.result("24 stated canonical forms");
  });
}

CheckResult integer_check(const EngineOptions& engine) {
  return timed("3", "integer simplices m-n and integer n at dimension k", 10.0, [&] {
    Judge j(engine);
    Tally t;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        const GameId got = j.ctx.evaluate(integer_simplex(m, n));
        t.check(j.same(got, make_number(j.ref, m - n)), [&] {
          return "integer_simplex(" + std::to_string(m) + "," + std::to_string(n) + ")=" + j.describe(got);
        });
      }
    for (int n = 0; n <= 3; ++n)
      for (int k = n + 1; k <= 5; ++k) {
        const Complex c = integer_at_dimension(n, k);
        const GameId got = j.ctx.evaluate(c);
        t.check(j.same(got, make_number(j.ref, n)) && c.dimension() == k, [&] {
          return "integer_at_dimension(" + std::to_string(n) + "," + std::to_string(k) + ")=" + j.describe(got) +
                 " dim " + std::to_string(c.dimension());
        });
      }
    return t.result("m-n for m,n<=4; n at dimension k for n<=3, n<k<=5");
  });
}

CheckResult fraction_check(const EngineOptions& engine) {
  return timed("4", "fractions 1/2^q and dyadics p/2^q", 60.0, [&] {
    Judge j(engine);
    Tally t;
    for (int q = 0; q <= 5; ++q) {
      const GameId got = j.ctx.evaluate(fraction_complex(q));
      t.check(j.same(got, make_number(j.ref, Dyadic::from_parts(1, q))),
              [&] { return "fraction_complex(" + std::to_string(q) + ")=" + j.describe(got); });
    }
    for (int p = -5; p <= 5; ++p)
      for (int q = 0; q <= 3; ++q) {
        if (q > 0 && p % 2 == 0) continue;
        const GameId got = j.ctx.evaluate(dyadic_complex(p, q));
        t.check(j.same(got, make_number(j.ref, Dyadic::from_parts(p, q))), [&] {
          return "dyadic_complex(" + std::to_string(p) + "," + std::to_string(q) + ")=" + j.describe(got);
        });
      }
    return t.result("1/2^q for q<=5; p/2^q for |p|<=5, q<=3 in lowest terms");
  });
}

GameId switch_of(GameContext& ctx, int a, int b) {
  return ctx.canonical(ctx.make({make_number(ctx, a)}, {make_number(ctx, b)}));
}

CheckResult switch_tiny_check(const EngineOptions& engine) {
  return timed("5", "switches {a|-b}, {a|b} and tinies +_n", 10.0, [&] {
    Judge j(engine);
    Tally t;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const GameId got = j.ctx.evaluate(switch_symmetric(a, b));
        t.check(j.same(got, switch_of(j.ref, a, -b)), [&] {
          return "switch_symmetric(" + std::to_string(a) + "," + std::to_string(b) + ")=" + j.describe(got);
        });
      }
    for (int a = 1; a <= 4; ++a)
      for (int b = 0; b < a; ++b) {
        const GameId got = j.ctx.evaluate(switch_general(a, b));
        t.check(j.same(got, switch_of(j.ref, a, b)), [&] {
          return "switch_general(" + std::to_string(a) + "," + std::to_string(b) + ")=" + j.describe(got);
        });
      }
    for (int n = 1; n <= 4; ++n) {
      const GameId got = j.ctx.evaluate(tiny_complex(n));
      const GameId want = make_tiny(j.ref, n);
      t.check(j.same(got, want), [&] {
        return "tiny_complex(" + std::to_string(n) + ")=" + j.describe(got) + ", want " + j.name(want);
      });
    }
    return t.result("{a|-b} for a,b<=4; {a|b} for 4>=a>b>=0; +_n for n<=4");
  });
}

CheckResult shifted_tiny_check(const EngineOptions& engine) {
  return timed("5b", "tiny complex on n+2 Right vertices is +_n", 10.0, [&] {
    Judge j(engine);
    Tally t;
    for (int n = 1; n <= 4; ++n) {
      const GameId got = j.ctx.evaluate(tiny_complex(n + 1));
      t.check(j.same(got, make_tiny(j.ref, n)),
              [&] { return "tiny_complex(" + std::to_string(n + 1) + ")=" + j.describe(got); });
    }
    return t.result("tiny_complex(n+1) = +_n for n<=4");
  });
}

CheckResult connected_switch_check(const EngineOptions& engine) {
  return timed("5c", "connecting face {x0,y0} keeps {a|-b} for a,b>=1", 10.0, [&] {
    Judge j(engine);
    Tally t;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        const GameId got = j.ctx.evaluate(switch_symmetric(a, b, true));
        t.check(j.same(got, switch_of(j.ref, a, -b)), [&] {
          return "switch_symmetric(" + std::to_string(a) + "," + std::to_string(b) + ",connected)=" + j.describe(got);
        });
      }
    return t.result("{a|-b} for 1<=a,b<=4");
  });
}

CheckResult nim_check(const EngineOptions& engine) {
  return timed("6", "Nim-pile Grundy values and partizan cross-check", 30.0, [&] {
    Judge j(engine);
    Tally t;
    for (int n = 1; n <= 5; ++n) {
      const int g = grundy(ImpartialComplex(nim_pile_complex(n)));
      t.check(g == n, [&] { return "grundy(nim " + std::to_string(n) + ")=" + std::to_string(g); });
    }
    for (int n = 1; n <= 4; ++n) {
      const ImpartialComplex c(nim_pile_complex(n));
      const GameId got = j.ctx.evaluate(doubled_partizan(c));
      t.check(j.same(got, make_nimber(j.ref, n)),
              [&] { return "doubled nim " + std::to_string(n) + "=" + j.describe(got); });
    }
    return t.result("grundy n for n<=5; doubled partizan value *n for n<=4");
  });
}

std::string dims_text(const CensusReport& r, const std::string& value) {
  auto it = r.values.find(value);
  if (it == r.values.end()) return value + " absent";
  std::string s = value + " at dim";
  for (int d : it->second.dimensions) s += " " + std::to_string(d);
  return s;
}

bool occurs_at(const CensusReport& r, const std::string& value, int dim) {
  auto it = r.values.find(value);
  if (it == r.values.end()) return false;
  const auto& d = it->second.dimensions;
  return std::find(d.begin(), d.end(), dim) != d.end();
}

CheckResult census_check(const EngineOptions& engine) {
  return timed("7", "census: no +-1 at dimension 1, no 0 at dimension 0", 60.0, [&] {
    CensusOptions opt;
    opt.max_vertices = 5;
    opt.max_dim = 1;
    opt.engine = engine;
    const CensusReport r = run_census(opt);
    const bool ok = !occurs_at(r, "1", 1) && !occurs_at(r, "-1", 1) && !occurs_at(r, "0", 0);
    std::string got = std::to_string(r.classes) + " classes, " + std::to_string(r.values.size()) + " values; " +
                      dims_text(r, "1") + "; " + dims_text(r, "-1") + "; " + dims_text(r, "0");
    return Outcome3{"1, -1 absent at dim 1; 0 absent at dim 0 (<=5 vertices)", got, ok};
  });
}

CheckResult domineering_check(const EngineOptions& engine) {
  return timed("8", "Domineering boards", 30.0, [&] {
    Judge j(engine);
    Tally t;
    struct Case {
      const char* board;
      const char* value;
    };
    const Case cases[] = {
        {"grid:1x1", "0"},
        {"grid:2x1", "1"},
        {"grid:2x2", "{1|-1}"},
        {"grid:3x2:mask=0,1;1,1", "{0|1}"},
        {"grid:4x3:mask=0,0;0,2;1,0;2,2;3,0;3,2", "^"},
        {"grid:2x5", "1/2"},
    };
    for (const auto& c : cases) {
      const GameId got = j.ctx.evaluate(domineering_complex(Board::parse_spec(c.board)));
      const GameId want = j.ref.canonical(parse_game(j.ref, c.value));
      t.check(j.same(got, want), [&] { return std::string(c.board) + "=" + j.describe(got); });
    }
    const Complex board = domineering_complex(Board::grid(2, 5));
    const int formal = j.ctx.formal_birthday(j.ctx.from_complex(board));
    const int born = j.ctx.birthday(j.ctx.evaluate(board));
    t.check(formal == 5 && born == 2, [&] {
      return "2x5 birthdays " + std::to_string(formal) + "/" + std::to_string(born);
    });
    return t.result("0, 1, +-1, {0|1}, up, 1/2; 2x5 formal birthday 5, birthday 2");
  });
}

// Property suites ----------------------------------------------------------

RandomComplexShape small_shape() {
  RandomComplexShape s;
  s.max_vertices = 5;
  s.max_facets = 4;
  s.max_facet_size = 3;
  return s;
}

Outcome3 negation_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  GameContext ctx(opt.engine);
  Tally t;
  for (int i = 0; i < opt.property_cases; ++i) {
    const Complex c = random_complex(rng, {});
    const GameId g = ctx.from_complex(c);
    t.check(ctx.outcome(ctx.add(g, ctx.negate(g))) == Outcome::P, [&] { return one_line(c); });
  }
  return t.result("G + (-G) = 0");
}

Outcome3 canonical_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  GameContext ctx(opt.engine);
  Tally t;
  for (int i = 0; i < opt.property_cases; ++i) {
    const Complex c = random_complex(rng, {});
    const GameId g = ctx.from_complex(c);
    const GameId k = ctx.canonical(g);
    t.check(ctx.canonical(k) == k && ctx.equal(g, k), [&] { return one_line(c); });
  }
  return t.result("canonical form idempotent and equal to the game");
}

Outcome3 leq_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  GameContext ctx(opt.engine);
  Tally t;
  for (int i = 0; i < opt.property_cases; ++i) {
    const Complex a = random_complex(rng, small_shape());
    const Complex b = random_complex(rng, small_shape());
    const GameId g = ctx.from_complex(a);
    const GameId h = ctx.from_complex(b);
    const Outcome o = ctx.outcome(ctx.subtract(g, h));
    t.check(ctx.leq(g, h) == (o == Outcome::P || o == Outcome::R),
            [&] { return one_line(a) + " vs " + one_line(b); });
  }
  return t.result("leq agrees with the outcome of the difference");
}

Outcome3 join_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  GameContext ctx(opt.engine);
  Tally t;
  for (int i = 0; i < opt.property_cases; ++i) {
    const Complex a = random_complex(rng, small_shape());
    const Complex b = random_complex(rng, small_shape()).renamed("r");
    const GameId joined = ctx.canonical(ctx.from_complex(join(a, b)));
    const GameId sum = ctx.canonical(ctx.add(ctx.from_complex(a), ctx.from_complex(b)));
    t.check(joined == sum, [&] { return one_line(a) + " * " + one_line(b); });
  }
  return t.result("value of the join equals value of the sum");
}

Outcome3 birthday_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  GameContext ctx(opt.engine);
  Tally t;
  for (int i = 0; i < opt.property_cases; ++i) {
    RandomComplexShape shape;
    shape.max_vertices = 7;
    shape.max_facet_size = 5;
    const Complex c = random_complex(rng, shape);
    const GameId g = ctx.from_complex(c);
    t.check(ctx.formal_birthday(g) == c.dimension() + 1 && ctx.birthday(g) <= ctx.formal_birthday(g),
            [&] { return one_line(c); });
  }
  return t.result("formal birthday = dimension + 1 >= birthday");
}

Complex disjoint_union(const std::vector<Complex>& parts) {
  std::vector<std::vector<Vertex>> faces;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto f = faces_of(parts[i].renamed("p" + std::to_string(i)));
    faces.insert(faces.end(), f.begin(), f.end());
  }
  return Complex::normalize(faces);
}

Outcome3 structural_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  Tally t;
  int applicable = 0;
  for (int attempt = 0; applicable < opt.property_cases && attempt < 50 * opt.property_cases; ++attempt) {
    Complex c;
    std::uniform_int_distribution<int> kind(0, 2), size(1, 4), count(1, 4);
    switch (kind(rng)) {
      case 0: {
        const int s = size(rng);
        c = random_pure_complex(rng, std::min(8, s + 3), s, count(rng), false);
        break;
      }
      case 1: {
        std::vector<Complex> parts;
        const int pieces = std::uniform_int_distribution<int>(2, 3)(rng);
        for (int p = 0; p < pieces; ++p) {
          const int s = std::uniform_int_distribution<int>(1, 2)(rng);
          parts.push_back(random_pure_complex(rng, s + 1, s, count(rng), false));
        }
        c = disjoint_union(parts);
        break;
      }
      default: {
        RandomComplexShape shape;
        shape.max_vertices = 8;
        shape.labeled = false;
        c = random_complex(rng, shape);
      }
    }
    const ImpartialComplex ic(c);
    const int g = grundy(ic);
    // a second-player win needs a facet of even size
    if (g == 0) {
      const auto facets = c.facets();
      t.check(std::any_of(facets.begin(), facets.end(), [](const Face& f) { return f.size() % 2 == 0; }),
              [&] { return "no even facet in " + one_line(c); });
    }
    if (auto p = predict_structural(ic)) {
      ++applicable;
      t.check(p->grundy == g, [&] {
        return one_line(c) + " predicted " + std::to_string(p->grundy) + " got " + std::to_string(g);
      });
    }
  }
  Outcome3 o = t.result("structural predictions match grundy");
  o.got += " (" + std::to_string(applicable) + " predicted)";
  o.correct = o.correct && applicable >= opt.property_cases;
  return o;
}

Outcome3 nimber_suite(const VerifyOptions& opt, std::mt19937_64& rng) {
  GameContext ctx(opt.engine);
  GameContext ref;
  Tally t;
  auto same = [&](GameId got, int n) { return ref.import(ctx, got) == make_nimber(ref, n); };
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      const GameId got = ctx.canonical(ctx.add(make_nimber(ctx, m), make_nimber(ctx, n)));
      t.check(same(got, m ^ n), [&] { return "*" + std::to_string(m) + "+*" + std::to_string(n); });
    }
  std::uniform_int_distribution<int> pick(0, 6);
  while (t.cases < opt.property_cases) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    const GameId got =
        ctx.canonical(ctx.add(ctx.add(make_nimber(ctx, a), make_nimber(ctx, b)), make_nimber(ctx, c)));
    t.check(same(got, a ^ b ^ c), [&] {
      return "*" + std::to_string(a) + "+*" + std::to_string(b) + "+*" + std::to_string(c);
    });
  }
  return t.result("nimber sums follow XOR");
}

std::vector<CheckResult> property_checks(const VerifyOptions& opt) {
  using Suite = Outcome3 (*)(const VerifyOptions&, std::mt19937_64&);
  const std::pair<const char*, Suite> suites[] = {
      {"G + (-G) = 0", negation_suite},
      {"canonical form idempotent, value-preserving", canonical_suite},
      {"leq iff difference outcome", leq_suite},
      {"join value equals sum value", join_suite},
      {"formal birthday = dim + 1", birthday_suite},
      {"structural Grundy predictions", structural_suite},
      {"nimber XOR addition", nimber_suite},
  };
  std::vector<CheckResult> subs;
  const auto start = std::chrono::steady_clock::now();
  char letter = 'a';
  for (std::size_t i = 0; i < std::size(suites); ++i, ++letter) {
    std::mt19937_64 rng(opt.seed + i);
    subs.push_back(timed(std::string("9") + letter, suites[i].first, 0,
                         [&] { return suites[i].second(opt, rng); }));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CheckResult total;
  total.id = "9";
  total.name = "property suites";
  total.expected = "7 suites, >= " + std::to_string(opt.property_cases) + " cases each, seed " + std::to_string(opt.seed);
  int held = 0;
  for (const auto& s : subs) held += s.correct ? 1 : 0;
  total.got = std::to_string(held) + "/7 suites hold";
  total.correct = held == 7;
  total.seconds = secs;
  total.limit_seconds = 60.0;
  std::vector<CheckResult> out{total};
  out.insert(out.end(), subs.begin(), subs.end());
  return out;
}

CheckResult sp_tree_check(const VerifyOptions& opt) {
  return timed("10", "SP-tree commutation check", 1.0, [&] {
    GameContext ctx(opt.engine);
    Tally t;
    const GameId half = ctx.canonical(make_number(ctx, Dyadic::from_parts(-1, 1)));
    t.check(!ctx.sp_tree_check(half), [&] { return "canonical -1/2 passed"; });
    std::vector<Complex> corpus;
    for (const auto& e : birthday2_catalog()) corpus.push_back(e.complex);
    for (int q = 0; q <= 3; ++q) corpus.push_back(fraction_complex(q));
    for (int n = 1; n <= 3; ++n) corpus.push_back(tiny_complex(n));
    corpus.push_back(integer_at_dimension(1, 2));
    corpus.push_back(switch_general(3, 1));
    corpus.push_back(domineering_complex(Board::grid(2, 3)));
    corpus.push_back(snort_complex(Board::path(3)));
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 50; ++i) corpus.push_back(random_complex(rng, {}));
    for (const Complex& c : corpus)
      t.check(ctx.sp_tree_check(ctx.from_complex(c)), [&] { return one_line(c) + " failed"; });
    return t.result("false for canonical -1/2; true for every complex game");
  });
}

CheckResult col_check(const EngineOptions& engine) {
  return timed("11", "Col on paths is a number or number plus star", 10.0, [&] {
    GameContext ctx(engine);
    Tally t;
    std::string values;
    for (int n = 1; n <= 5; ++n) {
      const ValueDescriptor v = recognize(ctx, ctx.evaluate(col_complex(Board::path(n))));
      bool ok = std::holds_alternative<NumberValue>(v);
      if (auto* nim = std::get_if<NimberValue>(&v)) ok = nim->index == 1;
      if (auto* nus = std::get_if<NumberUpStarValue>(&v)) ok = nus->ups == 0 && nus->star == 1;
      values += (n > 1 ? ", " : "") + render_value(v);
      t.check(ok, [&] { return "P" + std::to_string(n) + "=" + render_value(v); });
    }
    Outcome3 o = t.result("x or x* for P1..P5");
    o.got += " [" + values + "]";
    return o;
  });
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CheckResult> run_regression_checks(const VerifyOptions& options) {
  VerifyOptions opt = options;
  if (opt.engine.node_budget == 0) opt.engine.node_budget = kCheckNodeBudget;
  std::vector<CheckResult> out;
  out.push_back(snort_fixture());
  out.push_back(col_matches_example());
  out.push_back(catalog_check(opt.engine));
  out.push_back(integer_check(opt.engine));
  out.push_back(fraction_check(opt.engine));
  out.push_back(switch_tiny_check(opt.engine));
  out.push_back(shifted_tiny_check(opt.engine));
  out.push_back(connected_switch_check(opt.engine));
  out.push_back(nim_check(opt.engine));
  out.push_back(census_check(opt.engine));
  out.push_back(domineering_check(opt.engine));
  for (auto& r : property_checks(opt)) out.push_back(std::move(r));
  out.push_back(sp_tree_check(opt));
  out.push_back(col_check(opt.engine));
  return out;
}

std::vector<CheckResult> run_fixture_checks(const std::filesystem::path& dir, const EngineOptions& engine) {
  if (!std::filesystem::is_directory(dir)) throw Error("fixture directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cx") files.push_back(entry.path());
  if (files.empty()) throw Error("no .cx fixtures in '" + dir.string() + "'");
  std::sort(files.begin(), files.end());

  std::vector<CheckResult> out;
  EngineOptions budgeted = engine;
  if (budgeted.node_budget == 0) budgeted.node_budget = kCheckNodeBudget;
  Judge j(budgeted);
  for (const auto& file : files) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::string expect;
    bool impartial = false;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (line.starts_with("# expect:")) expect = line.substr(9);
      if (line.starts_with("# mode:") && line.find("impartial") != std::string::npos) impartial = true;
    }
    if (expect.empty()) throw Error(file.filename().string() + ": missing '# expect:' line");
    out.push_back(timed("fx", file.filename().string(), 0, [&] {
      const GameId want = j.ref.canonical(parse_game(j.ref, expect));
      if (impartial) {
        const int g = grundy(ImpartialComplex::parse(text));
        const GameId got = make_nimber(j.ref, g);
        return Outcome3{j.name(want), render_value(recognize(j.ref, got)), got == want};
      }
      const GameId got = j.ctx.evaluate(Complex::parse(text));
      return Outcome3{j.name(want), j.describe(got), j.same(got, want)};
    }));
  }
  return out;
}

std::string format_report(const std::vector<CheckResult>& results, bool timings) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& r : results) {
    failed += r.passed() ? 0 : 1;
    out << (r.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(4) << r.id << " " << r.name
        << " | expected: " << r.expected << " | got: " << r.got;
    if (r.correct && !r.passed()) out << " | over time limit";
    if (timings) {
      out << " | " << std::fixed << std::setprecision(4) << r.seconds << "s";
      if (r.limit_seconds > 0) out << " < " << r.limit_seconds << "s";
      out.unsetf(std::ios::fixed);
    }
    out << '\n';
  }
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Random complexes

Complex random_complex(std::mt19937_64& rng, const RandomComplexShape& shape) {
  if (shape.min_vertices < 1 || shape.max_vertices < shape.min_vertices || shape.max_facets < 1 ||
      shape.max_facet_size < 1)
    throw Error("bad random complex shape");
  const int n = std::uniform_int_distribution<int>(shape.min_vertices, shape.max_vertices)(rng);
  std::vector<Vertex> vs;
  int lefts = 0, rights = 0;
  for (int i = 0; i < n; ++i) {
    if (!shape.labeled) {
      vs.push_back({"v" + std::to_string(i + 1), Label::None});
    } else if (std::bernoulli_distribution(0.5)(rng)) {
      vs.push_back({"x" + std::to_string(++lefts), Label::Left});
    } else {
      vs.push_back({"y" + std::to_string(++rights), Label::Right});
    }
  }
  const int facets = std::uniform_int_distribution<int>(1, shape.max_facets)(rng);
  std::vector<std::vector<Vertex>> faces;
  for (int f = 0; f < facets; ++f) {
    const int size = std::uniform_int_distribution<int>(1, std::min(n, shape.max_facet_size))(rng);
    std::vector<Vertex> pool = vs;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    faces.push_back(std::move(pool));
  }
  return Complex::normalize(faces);
}

Complex random_pure_complex(std::mt19937_64& rng, int vertices, int size, int facets, bool labeled) {
  if (size < 1 || vertices < size || facets < 1) throw Error("bad pure complex shape");
  std::vector<Vertex> vs;
  for (int i = 0; i < vertices; ++i) {
    if (!labeled)
      vs.push_back({"v" + std::to_string(i + 1), Label::None});
    else
      vs.push_back(i % 2 ? Vertex{"y" + std::to_string(i / 2 + 1), Label::Right}
                         : Vertex{"x" + std::to_string(i / 2 + 1), Label::Left});
  }
  std::vector<std::vector<Vertex>> faces;
  for (int f = 0; f < facets; ++f) {
    std::vector<Vertex> pool = vs;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    faces.push_back(std::move(pool));
  }
  return Complex::normalize(faces);
}

}  // namespace spg
