#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "spgame/game.hpp"

namespace spg {

/// Exact dyadic rational p / 2^q in lowest terms (q == 0 or p odd).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : p_(integer) {}  // NOLINT(google-explicit-constructor)
  /// Reduces to lowest terms. Throws `Error` for q outside [0, 62].
  static Dyadic from_parts(std::int64_t p, int q);

  std::int64_t numerator() const { return p_; }
  int exponent() const { return q_; }
  bool is_integer() const { return q_ == 0; }
  int sign() const { return (p_ > 0) - (p_ < 0); }
  std::int64_t floor() const;
  std::int64_t ceil() const;

  Dyadic operator-() const { return from_parts(-p_, q_); }
  friend Dyadic operator+(Dyadic a, Dyadic b);
  friend Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }
  Dyadic half() const { return from_parts(p_, q_ + 1); }
  friend std::strong_ordering operator<=>(Dyadic a, Dyadic b);
  friend bool operator==(Dyadic a, Dyadic b) = default;

  /// "3", "-1/2", "2+1/2", "-2-1/2".
  std::string to_string() const;
  /// "p/2^q" style with the denominator written out: "5/2", "-1/4".
  std::string to_fraction_string() const;

 private:
  std::int64_t p_ = 0;
  int q_ = 0;
};

/// Simplest number strictly between a and b: the integer nearest zero if one
/// fits, otherwise the fraction with the smallest power-of-two denominator.
/// Throws `Error` unless a < b.
Dyadic simplest_between(Dyadic a, Dyadic b);

struct NumberValue {
  Dyadic value;
  friend bool operator==(const NumberValue&, const NumberValue&) = default;
};
struct NimberValue {
  int index = 1;  // >= 1; *0 is reported as NumberValue{0}
  friend bool operator==(const NimberValue&, const NimberValue&) = default;
};
/// number + ups·↑ + *star
struct NumberUpStarValue {
  Dyadic number;
  int ups = 0;
  int star = 0;
  friend bool operator==(const NumberUpStarValue&, const NumberUpStarValue&) = default;
};
/// {left | right} with numbers left > right; mean ± temperature.
struct SwitchValue {
  Dyadic left;
  Dyadic right;
  Dyadic mean() const { return (left + right).half(); }
  Dyadic temperature() const { return (left - right).half(); }
  friend bool operator==(const SwitchValue&, const SwitchValue&) = default;
};
/// offset + {0 | {0 | -sub}}, sub > 0
struct TinyValue {
  Dyadic offset;
  Dyadic sub;
  friend bool operator==(const TinyValue&, const TinyValue&) = default;
};
/// offset + {{sub | 0} | 0}, sub > 0
struct MinyValue {
  Dyadic offset;
  Dyadic sub;
  friend bool operator==(const MinyValue&, const MinyValue&) = default;
};
/// Anything else, kept as the pretty bracket string of its canonical form.
struct LiteralValue {
  std::string bracket;
  friend bool operator==(const LiteralValue&, const LiteralValue&) = default;
};

using ValueDescriptor = std::variant<NumberValue, NimberValue, NumberUpStarValue, SwitchValue,
                                     TinyValue, MinyValue, LiteralValue>;

/// Recognition bounds; beyond them values fall back to LiteralValue.
inline constexpr int kMaxRecognizedUps = 8;
inline constexpr int kMaxRecognizedNimber = 64;
inline constexpr int kMaxUpStarNimber = 7;

// Canonical forms of named values, cached per context.
GameId make_number(GameContext& ctx, Dyadic d);
GameId make_nimber(GameContext& ctx, int n);
/// ups·↑ + *star; negative `ups` gives downs.
GameId make_up_star(GameContext& ctx, int ups, int star);
/// {a | b}; requires a > b.
GameId make_switch(GameContext& ctx, Dyadic a, Dyadic b);
/// +_d = {0 | {0 | -d}}; requires d > 0.
GameId make_tiny(GameContext& ctx, Dyadic d);
GameId make_miny(GameContext& ctx, Dyadic d);
/// Canonical game of any descriptor; LiteralValue goes through the parser.
GameId make_value(GameContext& ctx, const ValueDescriptor& v);

/// Value of a canonical number game, nullopt for non-numbers. Throws `Error`
/// when `g` is not canonical.
std::optional<Dyadic> number_value(GameContext& ctx, GameId g);

/// Left and right stops of `g` (canonicalized internally).
std::optional<Dyadic> left_stop(GameContext& ctx, GameId g);
std::optional<Dyadic> right_stop(GameContext& ctx, GameId g);

/// Classifies `g`: number, nimber, number+ups+star, switch of numbers,
/// number-translated tiny/miny, else literal. Sound: make_value of the
/// result equals `g`.
ValueDescriptor recognize(GameContext& ctx, GameId g);

enum class RenderStyle : std::uint8_t {
  Pretty,   // switches as "{1|-1} = 0±1"
  Machine,  // ASCII; switches as "{1|-1}", literals prefixed "L:"
};
std::string render_value(const ValueDescriptor& v, RenderStyle style = RenderStyle::Pretty);

/// Bracket notation with numbers and nimbers printed by name.
std::string to_pretty_bracket(GameContext& ctx, GameId g);

/// Parses bracket notation whose atoms may be integers, p/2^q fractions
/// written "p/D", `*`, `*n`, `^` and `v`. Braces build literal nodes; atoms
/// build canonical forms. Throws `ParseError`.
GameId parse_game(GameContext& ctx, std::string_view text);

}  // namespace spg
