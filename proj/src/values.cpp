#include "spgame/values.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace spg {

namespace {

__extension__ using Wide = __int128;

constexpr int kMaxExponent = 62;

std::int64_t narrow(Wide v) {
  if (v > Wide{INT64_MAX} || v < Wide{INT64_MIN}) throw Error("dyadic arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Wide scaled(Dyadic d, int q) { return Wide{d.numerator()} << (q - d.exponent()); }

}  // namespace

Dyadic Dyadic::from_parts(std::int64_t p, int q) {
  if (q < 0 || q > kMaxExponent) throw Error("dyadic exponent out of range");
  while (q > 0 && p % 2 == 0) {
    p /= 2;
    --q;
  }
  Dyadic d;
  d.p_ = p;
  d.q_ = p == 0 ? 0 : q;
  return d;
}

std::int64_t Dyadic::floor() const { return p_ >> q_; }
std::int64_t Dyadic::ceil() const { return -((-p_) >> q_); }

Dyadic operator+(Dyadic a, Dyadic b) {
  const int q = std::max(a.q_, b.q_);
  return Dyadic::from_parts(narrow(scaled(a, q) + scaled(b, q)), q);
}

std::strong_ordering operator<=>(Dyadic a, Dyadic b) {
  const int q = std::max(a.q_, b.q_);
  const Wide x = scaled(a, q), y = scaled(b, q);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (q_ == 0) return std::to_string(p_);
  const bool negative = p_ < 0;
  const std::int64_t mag = negative ? -p_ : p_;
  const std::int64_t whole = mag >> q_;
  const std::int64_t frac = mag - (whole << q_);
  const std::string tail = std::to_string(frac) + "/" + std::to_string(std::int64_t{1} << q_);
  if (whole == 0) return (negative ? "-" : "") + tail;
  return (negative ? "-" : "") + std::to_string(whole) + (negative ? "-" : "+") + tail;
}

std::string Dyadic::to_fraction_string() const {
  if (q_ == 0) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(std::int64_t{1} << q_);
}

Dyadic simplest_between(Dyadic a, Dyadic b) {
  if (!(a < b)) throw Error("simplest_between requires a < b");
  if (a < Dyadic{0} && Dyadic{0} < b) return 0;
  if (a >= Dyadic{0}) {
    Dyadic n{a.floor() + 1};
    if (n < b) return n;
  } else {
    Dyadic n{b.ceil() - 1};
    if (n > a) return n;
  }
  for (int q = 1; q <= kMaxExponent; ++q) {
    // smallest p with p/2^q > a
    const Wide p = (scaled(a, std::max(q, a.exponent())) >> (std::max(q, a.exponent()) - q)) + 1;
    Dyadic candidate = Dyadic::from_parts(narrow(p), q);
    if (candidate > a && candidate < b) return candidate;
  }
  throw Error("simplest_between: interval too narrow");
}

// ---------------------------------------------------------------------------
// Builders

GameId make_number(GameContext& ctx, Dyadic d) {
  const std::string key = "n" + d.to_fraction_string();
  if (auto it = ctx.builder_cache().find(key); it != ctx.builder_cache().end()) return it->second;
  GameId g = ctx.zero();
  if (d.is_integer()) {
    const std::int64_t n = d.numerator();
    if (n > 0)
      g = ctx.make({make_number(ctx, n - 1)}, {});
    else if (n < 0)
      g = ctx.make({}, {make_number(ctx, n + 1)});
  } else {
    const Dyadic lo = Dyadic::from_parts(d.numerator() - 1, d.exponent());
    const Dyadic hi = Dyadic::from_parts(d.numerator() + 1, d.exponent());
    g = ctx.make({make_number(ctx, lo)}, {make_number(ctx, hi)});
  }
  g = ctx.canonical(g);
  ctx.builder_cache().emplace(key, g);
  return g;
}

GameId make_nimber(GameContext& ctx, int n) {
  if (n < 0) throw Error("nimber index must be nonnegative");
  if (n == 0) return ctx.zero();
  const std::string key = "*" + std::to_string(n);
  if (auto it = ctx.builder_cache().find(key); it != ctx.builder_cache().end()) return it->second;
  std::vector<GameId> opts;
  for (int i = 0; i < n; ++i) opts.push_back(make_nimber(ctx, i));
  GameId g = ctx.canonical(ctx.make(opts, opts));
  ctx.builder_cache().emplace(key, g);
  return g;
}

GameId make_up_star(GameContext& ctx, int ups, int star) {
  if (star < 0) throw Error("star index must be nonnegative");
  const std::string key = "u" + std::to_string(ups) + "," + std::to_string(star);
  if (auto it = ctx.builder_cache().find(key); it != ctx.builder_cache().end()) return it->second;
  GameId up = ctx.make({ctx.zero()}, {make_nimber(ctx, 1)});
  GameId unit = ups >= 0 ? up : ctx.negate(up);
  GameId acc = ctx.zero();
  for (int i = 0; i < std::abs(ups); ++i) acc = ctx.canonical(ctx.add(acc, unit));
  acc = ctx.canonical(ctx.add(acc, make_nimber(ctx, star)));
  ctx.builder_cache().emplace(key, acc);
  return acc;
}

GameId make_switch(GameContext& ctx, Dyadic a, Dyadic b) {
  if (!(a > b)) throw Error("switch {a|b} requires a > b");
  return ctx.canonical(ctx.make({make_number(ctx, a)}, {make_number(ctx, b)}));
}

GameId make_tiny(GameContext& ctx, Dyadic d) {
  if (!(d > Dyadic{0})) throw Error("tiny requires a positive subscript");
  GameId inner = ctx.make({ctx.zero()}, {make_number(ctx, -d)});
  return ctx.canonical(ctx.make({ctx.zero()}, {inner}));
}

GameId make_miny(GameContext& ctx, Dyadic d) { return ctx.canonical(ctx.negate(make_tiny(ctx, d))); }

GameId make_value(GameContext& ctx, const ValueDescriptor& v) {
  auto shifted = [&ctx](Dyadic offset, GameId g) {
    return ctx.canonical(ctx.add(make_number(ctx, offset), g));
  };
  return std::visit(
      [&](const auto& x) -> GameId {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NumberValue>) {
          return make_number(ctx, x.value);
        } else if constexpr (std::is_same_v<T, NimberValue>) {
          return make_nimber(ctx, x.index);
        } else if constexpr (std::is_same_v<T, NumberUpStarValue>) {
          return shifted(x.number, make_up_star(ctx, x.ups, x.star));
        } else if constexpr (std::is_same_v<T, SwitchValue>) {
          return make_switch(ctx, x.left, x.right);
        } else if constexpr (std::is_same_v<T, TinyValue>) {
          return shifted(x.offset, make_tiny(ctx, x.sub));
        } else if constexpr (std::is_same_v<T, MinyValue>) {
          return shifted(x.offset, make_miny(ctx, x.sub));
        } else {
          return ctx.canonical(parse_game(ctx, x.bracket));
        }
      },
      v);
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

// Number denoted by `g` when `g` is literally a canonical number form.
std::optional<Dyadic> literal_number(GameContext& ctx, GameId g) {
  if (g == ctx.zero()) return Dyadic{0};
  const auto ls = ctx.left(g);
  const auto rs = ctx.right(g);
  if (ls.size() > 1 || rs.size() > 1) return std::nullopt;
  const std::optional<GameId> l = ls.empty() ? std::nullopt : std::optional{ls[0]};
  const std::optional<GameId> r = rs.empty() ? std::nullopt : std::optional{rs[0]};
  std::optional<Dyadic> a, b;
  if (l && !(a = literal_number(ctx, *l))) return std::nullopt;
  if (r && !(b = literal_number(ctx, *r))) return std::nullopt;
  Dyadic candidate;
  if (a && b) {
    if (!(*a < *b)) return std::nullopt;
    candidate = simplest_between(*a, *b);
  } else if (a) {
    candidate = *a < Dyadic{0} ? Dyadic{0} : Dyadic{a->floor() + 1};
  } else {
    candidate = *b > Dyadic{0} ? Dyadic{0} : Dyadic{b->ceil() - 1};
  }
  if (make_number(ctx, candidate) != g) return std::nullopt;
  return candidate;
}

std::optional<int> literal_nimber(GameContext& ctx, GameId g) {
  if (g == ctx.zero()) return 0;
  const auto n = ctx.left(g).size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxRecognizedNimber)) return std::nullopt;
  if (ctx.right(g).size() != n) return std::nullopt;
  if (make_nimber(ctx, static_cast<int>(n)) != g) return std::nullopt;
  return static_cast<int>(n);
}

struct StopMemo {
  std::unordered_map<std::uint32_t, std::optional<Dyadic>> left, right;
};

std::optional<Dyadic> stop(GameContext& ctx, GameId g, bool left_side, StopMemo& memo) {
  auto& table = left_side ? memo.left : memo.right;
  if (auto it = table.find(g.value); it != table.end()) return it->second;
  std::optional<Dyadic> result = literal_number(ctx, g);
  if (!result) {
    std::vector<GameId> opts;
    for (GameId o : left_side ? ctx.left(g) : ctx.right(g)) opts.push_back(o);
    for (GameId o : opts) {
      auto s = stop(ctx, o, !left_side, memo);
      if (!s) {
        result.reset();
        break;
      }
      if (!result || (left_side ? *s > *result : *s < *result)) result = s;
    }
  }
  table[g.value] = result;
  return result;
}

std::optional<ValueDescriptor> infinitesimal_part(GameContext& ctx, GameId h, Dyadic offset) {
  if (auto n = literal_nimber(ctx, h); n && *n > 0) return NumberUpStarValue{offset, 0, *n};
  for (int k = 1; k <= kMaxRecognizedUps; ++k)
    for (int sign : {1, -1})
      for (int m = 0; m <= kMaxUpStarNimber; ++m)
        if (make_up_star(ctx, sign * k, m) == h) return NumberUpStarValue{offset, sign * k, m};

  const std::vector<GameId> ls(ctx.left(h).begin(), ctx.left(h).end());
  const std::vector<GameId> rs(ctx.right(h).begin(), ctx.right(h).end());
  if (ls.size() == 1 && rs.size() == 1) {
    // {0 | {0 | e}} with e < 0 is +_{-e}
    if (ls[0] == ctx.zero()) {
      GameId k = rs[0];
      if (ctx.left(k).size() == 1 && ctx.left(k)[0] == ctx.zero() && ctx.right(k).size() == 1)
        if (auto e = literal_number(ctx, ctx.right(k)[0]); e && *e < Dyadic{0})
          return TinyValue{offset, -*e};
    }
    if (rs[0] == ctx.zero()) {
      GameId k = ls[0];
      if (ctx.right(k).size() == 1 && ctx.right(k)[0] == ctx.zero() && ctx.left(k).size() == 1)
        if (auto e = literal_number(ctx, ctx.left(k)[0]); e && *e > Dyadic{0})
          return MinyValue{offset, *e};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Dyadic> number_value(GameContext& ctx, GameId g) {
  if (!ctx.is_canonical(g)) throw Error("number_value: game is not in canonical form");
  return literal_number(ctx, g);
}

std::optional<Dyadic> left_stop(GameContext& ctx, GameId g) {
  StopMemo memo;
  return stop(ctx, ctx.canonical(g), true, memo);
}

std::optional<Dyadic> right_stop(GameContext& ctx, GameId g) {
  StopMemo memo;
  return stop(ctx, ctx.canonical(g), false, memo);
}

ValueDescriptor recognize(GameContext& ctx, GameId g) {
  const GameId c = ctx.canonical(g);
  if (auto n = literal_number(ctx, c)) return NumberValue{*n};
  if (auto n = literal_nimber(ctx, c)) return NimberValue{*n};

  StopMemo memo;
  const auto ls = stop(ctx, c, true, memo);
  const auto rs = stop(ctx, c, false, memo);
  if (ls && rs && *ls == *rs) {
    const GameId h = ctx.canonical(ctx.subtract(c, make_number(ctx, *ls)));
    if (auto v = infinitesimal_part(ctx, h, *ls)) return *v;
  }

  if (ctx.left(c).size() == 1 && ctx.right(c).size() == 1) {
    auto a = literal_number(ctx, ctx.left(c)[0]);
    auto b = literal_number(ctx, ctx.right(c)[0]);
    if (a && b && *a > *b) return SwitchValue{*a, *b};
  }
  return LiteralValue{to_pretty_bracket(ctx, c)};
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string star_token(int star) {
  if (star == 0) return "";
  return star == 1 ? "*" : "*" + std::to_string(star);
}

std::string ups_token(int ups) {
  if (ups == 0) return "";
  const std::string arrow = ups > 0 ? ".^" : ".v";
  const int mag = std::abs(ups);
  return mag == 1 ? arrow : std::to_string(mag) + arrow;
}

}  // namespace

std::string render_value(const ValueDescriptor& v, RenderStyle style) {
  return std::visit(
      [style](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NumberValue>) {
          return x.value.to_string();
        } else if constexpr (std::is_same_v<T, NimberValue>) {
          return star_token(x.index);
        } else if constexpr (std::is_same_v<T, NumberUpStarValue>) {
          std::string s = x.number == Dyadic{0} ? "" : x.number.to_string();
          std::string u = ups_token(x.ups);
          if (!s.empty() && std::abs(x.ups) > 1) s += '+';
          return s + u + star_token(x.star);
        } else if constexpr (std::is_same_v<T, SwitchValue>) {
          std::string s = "{" + x.left.to_string() + "|" + x.right.to_string() + "}";
          if (style == RenderStyle::Machine) return s;
          return s + " = " + x.mean().to_string() + "±" + x.temperature().to_string();
        } else if constexpr (std::is_same_v<T, TinyValue> || std::is_same_v<T, MinyValue>) {
          const char* sign = std::is_same_v<T, TinyValue> ? "+_" : "-_";
          std::string s = x.offset == Dyadic{0} ? "" : x.offset.to_string();
          return s + sign + x.sub.to_string();
        } else {
          return style == RenderStyle::Machine ? "L:" + x.bracket : x.bracket;
        }
      },
      v);
}

std::string to_pretty_bracket(GameContext& ctx, GameId root) {
  std::unordered_map<std::uint32_t, std::string> memo;
  std::function<std::string(GameId)> render = [&](GameId g) -> std::string {
    if (auto it = memo.find(g.value); it != memo.end()) return it->second;
    std::string s;
    if (auto n = literal_number(ctx, g)) {
      s = n->to_fraction_string();
    } else if (auto m = literal_nimber(ctx, g)) {
      s = star_token(*m);
    } else {
      auto side = [&](std::vector<GameId> opts) {
        std::vector<std::string> parts;
        for (GameId o : opts) parts.push_back(render(o));
        std::sort(parts.begin(), parts.end());
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
        return out;
      };
      auto l = ctx.left(g);
      auto r = ctx.right(g);
      std::vector<GameId> lv(l.begin(), l.end()), rv(r.begin(), r.end());
      s = "{" + side(lv) + "|" + side(rv) + "}";
    }
    memo[g.value] = s;
    return s;
  };
  return render(root);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class GameParser {
 public:
  GameParser(GameContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  GameId parse() {
    GameId g = game();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "game expression at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  std::int64_t integer() {
    if (!digit()) fail("expected digits");
    std::int64_t v = 0;
    while (digit()) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > (std::int64_t{1} << 40)) fail("number too large");
    }
    return v;
  }

  GameId game() {
    if (peek('{')) {
      ++pos_;
      auto left = options('|');
      ++pos_;
      auto right = options('}');
      ++pos_;
      return ctx_.make(std::move(left), std::move(right));
    }
    return atom();
  }

  std::vector<GameId> options(char close) {
    std::vector<GameId> out;
    if (peek(close)) return out;
    for (;;) {
      out.push_back(game());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      if (peek(close)) return out;
      fail(std::string("expected ',' or '") + close + "'");
    }
  }

  GameId atom() {
    skip();
    const std::size_t start = pos_;
    GameId acc = ctx_.zero();
    bool any = false;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (digit()) {
      std::int64_t p = integer();
      Dyadic value{p};
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::int64_t den = integer();
        if (den <= 0 || (den & (den - 1)) != 0) fail("denominator must be a power of two");
        value = Dyadic::from_parts(p, std::countr_zero(static_cast<std::uint64_t>(den)));
      }
      acc = make_number(ctx_, negative ? -value : value);
      any = true;
    } else if (negative) {
      fail("expected a number after '-'");
    }
    if (pos_ < text_.size() && (text_[pos_] == '^' || text_[pos_] == 'v')) {
      const int ups = text_[pos_++] == '^' ? 1 : -1;
      acc = ctx_.canonical(ctx_.add(acc, make_up_star(ctx_, ups, 0)));
      any = true;
    }
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      int n = digit() ? static_cast<int>(integer()) : 1;
      acc = ctx_.canonical(ctx_.add(acc, make_nimber(ctx_, n)));
      any = true;
    }
    if (!any) {
      pos_ = start;
      fail("expected '{' or a value atom");
    }
    return acc;
  }

  GameContext& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GameId parse_game(GameContext& ctx, std::string_view text) { return GameParser(ctx, text).parse(); }

}  // namespace spg
