#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spgame/complex.hpp"

namespace spg {

/// Handle to an interned game node. Only meaningful inside the
/// `GameContext` that produced it; id 0 is always the game 0 = { | }.
struct GameId {
  std::uint32_t value = 0;
  friend auto operator<=>(GameId, GameId) = default;
};

/// Normal-play outcome classes. Partial order: R < N < L and R < P < L,
/// with N and P incomparable.
enum class Outcome : std::uint8_t { N, P, L, R };

bool outcome_leq(Outcome a, Outcome b);
std::string_view to_string(Outcome o);

/// Switches for the canonical-form simplifications. Turning either off
/// breaks canonicity; used for fault injection in the verification harness.
struct EngineOptions {
  bool remove_dominated = true;
  bool bypass_reversible = true;
  /// Cap on stored nodes plus option slots; 0 means unlimited. Exceeding it
  /// throws `Error`.
  std::size_t node_budget = 0;
};

/// One evaluation context: the intern table for game nodes plus every memo
/// table keyed on node ids.
///
/// Structurally equal games are the same node, so literal equality is id
/// equality. A context is not thread-safe; give each worker its own. Ids from
/// different contexts must never be mixed.
class GameContext {
 public:
  explicit GameContext(EngineOptions options = {});

  const EngineOptions& options() const { return options_; }

  GameId zero() const { return GameId{0}; }
  /// Interns {left | right}. Option lists are deduplicated and sorted.
  GameId make(std::vector<GameId> left, std::vector<GameId> right);
  std::span<const GameId> left(GameId g) const;
  std::span<const GameId> right(GameId g) const;
  std::size_t node_count() const { return nodes_.size(); }

  /// Literal game of a labeled complex: Left options are the links of Left
  /// vertices lying in some facet, likewise for Right.
  GameId from_complex(const Complex& c);
  /// Canonical form of the game of `c`. Equal to canonical(from_complex(c)),
  /// but evaluates join factors separately and canonicalizes bottom-up.
  GameId evaluate(const Complex& c);

  Outcome outcome(GameId g);
  GameId negate(GameId g);
  GameId add(GameId g, GameId h);
  GameId subtract(GameId g, GameId h) { return add(g, negate(h)); }

  /// g <= h by the recursive criterion: no Left option of g is >= h and no
  /// Right option of h is <= g.
  bool leq(GameId g, GameId h);
  bool equal(GameId g, GameId h) { return leq(g, h) && leq(h, g); }
  bool greater(GameId g, GameId h) { return leq(h, g) && !leq(g, h); }
  bool incomparable(GameId g, GameId h) { return !leq(g, h) && !leq(h, g); }

  /// Removes dominated options and bypasses reversible ones until no change.
  GameId canonical(GameId g);
  bool is_canonical(GameId g) { return canonical(g) == g; }

  /// Height of the game DAG.
  int formal_birthday(GameId g);
  int birthday(GameId g) { return formal_birthday(canonical(g)); }

  /// Commutation condition satisfied by every SP-game tree: each Left move
  /// followed by a Right move must be matched by a Right move followed by a
  /// Left move reaching the literally same node, and symmetrically.
  /// Necessary, not sufficient.
  bool sp_tree_check(GameId g);

  /// Copy of `g` from another context, sharing structure; literal identity
  /// across contexts becomes id equality after import.
  GameId import(const GameContext& other, GameId g);

  /// Raw bracket notation, children sorted by their own text.
  std::string to_bracket(GameId g);

  /// Per-context cache for named value builders (numbers, nimbers, ...).
  std::unordered_map<std::string, GameId>& builder_cache() { return builder_cache_; }

 private:
  struct Node {
    std::uint32_t begin;
    std::uint32_t left_count;
    std::uint32_t right_count;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept;
  };

  std::vector<GameId> copy_left(GameId g) const {
    auto s = left(g);
    return {s.begin(), s.end()};
  }
  std::vector<GameId> copy_right(GameId g) const {
    auto s = right(g);
    return {s.begin(), s.end()};
  }
  bool leq_uncached(GameId g, GameId h);
  GameId canonical_uncached(GameId g);
  static std::uint64_t pair_key(GameId a, GameId b) {
    return (std::uint64_t{a.value} << 32) | b.value;
  }

  EngineOptions options_;
  std::vector<Node> nodes_;
  std::vector<GameId> pool_;
  std::unordered_map<std::vector<std::uint32_t>, GameId, KeyHash> intern_;

  std::unordered_map<std::string, GameId> complex_memo_;
  std::unordered_map<std::string, GameId> evaluate_memo_;
  std::vector<std::uint8_t> outcome_memo_;
  std::vector<std::uint32_t> negate_memo_;
  std::vector<std::uint32_t> canonical_memo_;
  std::vector<std::int32_t> height_memo_;
  std::unordered_map<std::uint64_t, GameId> add_memo_;
  std::unordered_map<std::uint64_t, bool> leq_memo_;
  std::unordered_map<std::string, GameId> builder_cache_;
};

}  // namespace spg

template <>
struct std::hash<spg::GameId> {
  std::size_t operator()(spg::GameId g) const noexcept { return std::hash<std::uint32_t>{}(g.value); }
};
