#include "spgame/game.hpp"

#include <algorithm>
#include <limits>

namespace spg {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

template <class T>
void grow(std::vector<T>& v, std::size_t n, T fill) {
  if (v.size() < n) v.resize(n, fill);
}

void sort_unique(std::vector<GameId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool outcome_leq(Outcome a, Outcome b) {
  return a == b || a == Outcome::R || b == Outcome::L;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::N: return "N";
    case Outcome::P: return "P";
    case Outcome::L: return "L";
    case Outcome::R: return "R";
  }
  return "?";
}

std::size_t GameContext::KeyHash::operator()(const std::vector<std::uint32_t>& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t x : k) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

GameContext::GameContext(EngineOptions options) : options_(options) {
  nodes_.push_back({0, 0, 0});
  intern_.emplace(std::vector<std::uint32_t>{0}, GameId{0});
}

GameId GameContext::make(std::vector<GameId> left, std::vector<GameId> right) {
  sort_unique(left);
  sort_unique(right);
  std::vector<std::uint32_t> key;
  key.reserve(1 + left.size() + right.size());
  key.push_back(static_cast<std::uint32_t>(left.size()));
  for (GameId g : left) key.push_back(g.value);
  for (GameId g : right) key.push_back(g.value);
  if (auto it = intern_.find(key); it != intern_.end()) return it->second;

  if (options_.node_budget != 0 &&
      nodes_.size() + pool_.size() + left.size() + right.size() >= options_.node_budget)
    throw Error("game node budget exhausted");
  GameId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back({static_cast<std::uint32_t>(pool_.size()), static_cast<std::uint32_t>(left.size()),
                    static_cast<std::uint32_t>(right.size())});
  pool_.insert(pool_.end(), left.begin(), left.end());
  pool_.insert(pool_.end(), right.begin(), right.end());
  intern_.emplace(std::move(key), id);
  return id;
}

std::span<const GameId> GameContext::left(GameId g) const {
  const Node& n = nodes_.at(g.value);
  return {pool_.data() + n.begin, n.left_count};
}

std::span<const GameId> GameContext::right(GameId g) const {
  const Node& n = nodes_.at(g.value);
  return {pool_.data() + n.begin + n.left_count, n.right_count};
}

GameId GameContext::from_complex(const Complex& c) {
  std::string key = c.key();
  if (auto it = complex_memo_.find(key); it != complex_memo_.end()) return it->second;
  std::vector<GameId> left, right;
  for (VertexIndex v : c.support()) {
    const Label label = c.vertex(v).label;
    if (label == Label::None)
      throw Error("game_from_complex needs a labeled complex; vertex '" + c.vertex(v).name +
                  "' has no owner");
    GameId option = from_complex(*c.link(v));
    (label == Label::Left ? left : right).push_back(option);
  }
  GameId g = make(std::move(left), std::move(right));
  complex_memo_.emplace(std::move(key), g);
  return g;
}

GameId GameContext::evaluate(const Complex& c) {
  std::string key = c.key();
  if (auto it = evaluate_memo_.find(key); it != evaluate_memo_.end()) return it->second;
  GameId result = zero();
  auto factors = join_factors(c);
  if (factors.size() > 1) {
    for (const auto& f : factors) result = canonical(add(result, evaluate(f)));
  } else if (!factors.empty()) {
    std::vector<GameId> left, right;
    for (VertexIndex v : c.support()) {
      const Label label = c.vertex(v).label;
      if (label == Label::None)
        throw Error("evaluate needs a labeled complex; vertex '" + c.vertex(v).name +
                    "' has no owner");
      GameId option = evaluate(*c.link(v));
      (label == Label::Left ? left : right).push_back(option);
    }
    result = canonical(make(std::move(left), std::move(right)));
  }
  evaluate_memo_.emplace(std::move(key), result);
  return result;
}

Outcome GameContext::outcome(GameId g) {
  grow(outcome_memo_, nodes_.size(), std::uint8_t{0});
  if (std::uint8_t m = outcome_memo_[g.value]) {
    const bool lf = (m - 1) & 1, ls = (m - 1) & 2;
    if (lf && ls) return Outcome::L;
    if (!lf && !ls) return Outcome::R;
    return lf ? Outcome::N : Outcome::P;
  }
  // Left wins moving first iff some Left option is won by Left moving second;
  // Left wins moving second iff every Right option is won by Left moving first.
  bool left_first = false;
  for (GameId o : copy_left(g)) {
    Outcome oo = outcome(o);
    if (oo == Outcome::L || oo == Outcome::P) {
      left_first = true;
      break;
    }
  }
  bool left_second = true;
  for (GameId o : copy_right(g)) {
    Outcome oo = outcome(o);
    if (oo == Outcome::R || oo == Outcome::P) {
      left_second = false;
      break;
    }
  }
  grow(outcome_memo_, nodes_.size(), std::uint8_t{0});
  outcome_memo_[g.value] = static_cast<std::uint8_t>(1 + (left_first ? 1 : 0) + (left_second ? 2 : 0));
  return outcome(g);
}

GameId GameContext::negate(GameId g) {
  grow(negate_memo_, nodes_.size(), kUnset);
  if (negate_memo_[g.value] != kUnset) return GameId{negate_memo_[g.value]};
  std::vector<GameId> left, right;
  for (GameId o : copy_right(g)) left.push_back(negate(o));
  for (GameId o : copy_left(g)) right.push_back(negate(o));
  GameId n = make(std::move(left), std::move(right));
  grow(negate_memo_, nodes_.size(), kUnset);
  negate_memo_[g.value] = n.value;
  negate_memo_[n.value] = g.value;
  return n;
}

GameId GameContext::add(GameId g, GameId h) {
  if (g == zero()) return h;
  if (h == zero()) return g;
  const std::uint64_t key = pair_key(std::min(g, h), std::max(g, h));
  if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;
  std::vector<GameId> left, right;
  for (GameId o : copy_left(g)) left.push_back(add(o, h));
  for (GameId o : copy_left(h)) left.push_back(add(g, o));
  for (GameId o : copy_right(g)) right.push_back(add(o, h));
  for (GameId o : copy_right(h)) right.push_back(add(g, o));
  GameId s = make(std::move(left), std::move(right));
  add_memo_.emplace(key, s);
  return s;
}

bool GameContext::leq(GameId g, GameId h) {
  if (g == h) return true;
  const std::uint64_t key = pair_key(g, h);
  if (auto it = leq_memo_.find(key); it != leq_memo_.end()) return it->second;
  bool result = leq_uncached(g, h);
  leq_memo_.emplace(key, result);
  return result;
}

bool GameContext::leq_uncached(GameId g, GameId h) {
  for (GameId gl : copy_left(g))
    if (leq(h, gl)) return false;
  for (GameId hr : copy_right(h))
    if (leq(hr, g)) return false;
  return true;
}

GameId GameContext::canonical(GameId g) {
  grow(canonical_memo_, nodes_.size(), kUnset);
  if (canonical_memo_[g.value] != kUnset) return GameId{canonical_memo_[g.value]};
  GameId c = canonical_uncached(g);
  grow(canonical_memo_, nodes_.size(), kUnset);
  canonical_memo_[g.value] = c.value;
  canonical_memo_[c.value] = c.value;
  return c;
}

GameId GameContext::canonical_uncached(GameId g) {
  std::vector<GameId> left, right;
  for (GameId o : copy_left(g)) left.push_back(canonical(o));
  for (GameId o : copy_right(g)) right.push_back(canonical(o));
  sort_unique(left);
  sort_unique(right);

  for (bool changed = true; changed;) {
    changed = false;
    if (options_.bypass_reversible) {
      GameId current = make(left, right);
      // Left option reversible through a Right reply that is <= G.
      for (std::size_t i = 0; i < left.size() && !changed; ++i) {
        for (GameId reply : copy_right(left[i])) {
          if (!leq(reply, current)) continue;
          std::vector<GameId> next(left.begin(), left.end());
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          for (GameId o : copy_left(reply)) next.push_back(o);
          sort_unique(next);
          left = std::move(next);
          changed = true;
          break;
        }
      }
      for (std::size_t i = 0; i < right.size() && !changed; ++i) {
        for (GameId reply : copy_left(right[i])) {
          if (!leq(current, reply)) continue;
          std::vector<GameId> next(right.begin(), right.end());
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          for (GameId o : copy_right(reply)) next.push_back(o);
          sort_unique(next);
          right = std::move(next);
          changed = true;
          break;
        }
      }
      if (changed) continue;
    }
    if (options_.remove_dominated) {
      auto prune = [this](std::vector<GameId>& opts, bool left_side) {
        std::vector<GameId> kept;
        for (GameId a : opts) {
          // Among equal options (only possible with an option switched off)
          // the smallest id survives.
          bool dominated = std::any_of(opts.begin(), opts.end(), [&](GameId b) {
            if (b == a) return false;
            const bool worse = left_side ? leq(a, b) : leq(b, a);
            const bool better = left_side ? leq(b, a) : leq(a, b);
            return worse && (!better || b < a);
          });
          if (!dominated) kept.push_back(a);
        }
        bool shrunk = kept.size() != opts.size();
        opts = std::move(kept);
        return shrunk;
      };
      changed = prune(left, true);
      changed = prune(right, false) || changed;
    }
  }
  return make(std::move(left), std::move(right));
}

int GameContext::formal_birthday(GameId g) {
  grow(height_memo_, nodes_.size(), std::int32_t{-1});
  if (height_memo_[g.value] >= 0) return height_memo_[g.value];
  int h = 0;
  for (GameId o : left(g)) h = std::max(h, 1 + formal_birthday(o));
  for (GameId o : right(g)) h = std::max(h, 1 + formal_birthday(o));
  height_memo_[g.value] = h;
  return h;
}

bool GameContext::sp_tree_check(GameId root) {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<GameId> stack{root};
  auto contains = [](std::span<const GameId> opts, GameId x) {
    return std::binary_search(opts.begin(), opts.end(), x);
  };
  // first-side move then second-side reply must be reachable in the swapped order.
  auto commutes = [&](std::span<const GameId> first, std::span<const GameId> second,
                      auto reply_of, auto swapped_reply_of) {
    for (GameId a : first)
      for (GameId q : reply_of(a)) {
        bool found = std::any_of(second.begin(), second.end(),
                                 [&](GameId b) { return contains(swapped_reply_of(b), q); });
        if (!found) return false;
      }
    return true;
  };
  auto lefts = [this](GameId x) { return left(x); };
  auto rights = [this](GameId x) { return right(x); };
  while (!stack.empty()) {
    GameId p = stack.back();
    stack.pop_back();
    if (seen[p.value]) continue;
    seen[p.value] = 1;
    if (!commutes(left(p), right(p), rights, lefts)) return false;
    if (!commutes(right(p), left(p), lefts, rights)) return false;
    for (GameId o : left(p)) stack.push_back(o);
    for (GameId o : right(p)) stack.push_back(o);
  }
  return true;
}

GameId GameContext::import(const GameContext& other, GameId root) {
  std::unordered_map<std::uint32_t, GameId> copied;
  // explicit stack: imported games may be deep
  std::vector<std::pair<GameId, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [g, expanded] = stack.back();
    stack.pop_back();
    if (copied.contains(g.value)) continue;
    if (!expanded) {
      stack.push_back({g, true});
      for (GameId o : other.left(g))
        if (!copied.contains(o.value)) stack.push_back({o, false});
      for (GameId o : other.right(g))
        if (!copied.contains(o.value)) stack.push_back({o, false});
      continue;
    }
    std::vector<GameId> l, r;
    for (GameId o : other.left(g)) l.push_back(copied.at(o.value));
    for (GameId o : other.right(g)) r.push_back(copied.at(o.value));
    copied.emplace(g.value, make(std::move(l), std::move(r)));
  }
  return copied.at(root.value);
}

std::string GameContext::to_bracket(GameId root) {
  std::unordered_map<std::uint32_t, std::string> memo;
  std::function<const std::string&(GameId)> render = [&](GameId g) -> const std::string& {
    if (auto it = memo.find(g.value); it != memo.end()) return it->second;
    auto side = [&](std::span<const GameId> opts) {
      std::vector<std::string> parts;
      for (GameId o : opts) parts.push_back(render(o));
      std::sort(parts.begin(), parts.end());
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i];
      }
      return s;
    };
    std::string s = "{" + side(left(g)) + "|" + side(right(g)) + "}";
    return memo.emplace(g.value, std::move(s)).first->second;
  };
  return render(root);
}

}  // namespace spg
