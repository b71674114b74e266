#pragma once

// Independent reference implementation for tests. Shares no code with the
// library: complexes are sets of string sets, games are plain option lists,
// and comparison goes through the outcome of the difference game.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spgame/complex.hpp"
#include "spgame/game.hpp"

namespace oracle {

using Face = std::set<std::string>;
using Facets = std::set<Face>;

/// Keeps only maximal faces.
inline Facets maximal(const std::vector<Face>& faces) {
  Facets out;
  for (const Face& f : faces) {
    bool covered = false;
    for (const Face& g : faces)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) covered = true;
    if (!covered) out.insert(f);
  }
  return out;
}

inline Facets facets_of(const std::vector<std::vector<std::string>>& raw) {
  std::vector<Face> faces;
  for (const auto& r : raw) faces.emplace_back(r.begin(), r.end());
  return maximal(faces);
}

inline Facets facets_of(const spg::Complex& c) {
  Facets out;
  for (const auto& f : c.facets()) {
    Face face;
    for (auto v : f) face.insert(c.vertex(v).name);
    out.insert(face);
  }
  return out;
}

struct Game {
  std::vector<int> left, right;
};

class Arena {
 public:
  Arena() { zero_ = make({}, {}); }

  int zero() const { return zero_; }

  int make(std::vector<int> l, std::vector<int> r) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    auto key = std::make_pair(l, r);
    if (auto it = intern_.find(key); it != intern_.end()) return it->second;
    nodes_.push_back({l, r});
    const int id = static_cast<int>(nodes_.size()) - 1;
    intern_.emplace(std::move(key), id);
    return id;
  }
  const Game& at(int g) const { return nodes_[static_cast<std::size_t>(g)]; }

  // --- games of complexes: a Left move at vertex v goes to the link of v

  int from_facets(const Facets& f) {
    if (auto it = complex_memo_.find(f); it != complex_memo_.end()) return it->second;
    std::set<std::string> verts;
    for (const Face& face : f) verts.insert(face.begin(), face.end());
    std::vector<int> l, r;
    for (const std::string& v : verts) {
      std::vector<Face> link;
      for (const Face& face : f)
        if (face.contains(v)) {
          Face rest = face;
          rest.erase(v);
          link.push_back(rest);
        }
      const int child = from_facets(maximal(link));
      (v[0] == 'x' ? l : r).push_back(child);
    }
    const int id = make(l, r);
    complex_memo_.emplace(f, id);
    return id;
  }
  int from_facets(const std::vector<std::vector<std::string>>& raw) { return from_facets(facets_of(raw)); }

  // --- arithmetic

  int neg(int g) {
    if (auto it = neg_memo_.find(g); it != neg_memo_.end()) return it->second;
    std::vector<int> l, r;
    const Game gg = at(g);
    for (int x : gg.right) l.push_back(neg(x));
    for (int x : gg.left) r.push_back(neg(x));
    const int id = make(l, r);
    neg_memo_.emplace(g, id);
    return id;
  }

  int sum(int g, int h) {
    if (g == zero_) return h;
    if (h == zero_) return g;
    const auto key = std::make_pair(std::min(g, h), std::max(g, h));
    if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return it->second;
    std::vector<int> l, r;
    const Game gg = at(g), hh = at(h);
    for (int x : gg.left) l.push_back(sum(x, h));
    for (int x : hh.left) l.push_back(sum(g, x));
    for (int x : gg.right) r.push_back(sum(x, h));
    for (int x : hh.right) r.push_back(sum(g, x));
    const int id = make(l, r);
    sum_memo_.emplace(key, id);
    return id;
  }

  // --- outcomes by exhaustive play

  bool left_first_wins(int g) {
    if (auto it = lfw_.find(g); it != lfw_.end()) return it->second;
    bool win = false;
    const std::vector<int> opts = at(g).left;
    for (int x : opts)
      if (!right_first_wins(x)) {
        win = true;
        break;
      }
    lfw_[g] = win;
    return win;
  }
  bool right_first_wins(int g) {
    if (auto it = rfw_.find(g); it != rfw_.end()) return it->second;
    bool win = false;
    const std::vector<int> opts = at(g).right;
    for (int x : opts)
      if (!left_first_wins(x)) {
        win = true;
        break;
      }
    rfw_[g] = win;
    return win;
  }
  /// "L", "R", "N" or "P".
  std::string outcome(int g) {
    const bool l = left_first_wins(g), r = right_first_wins(g);
    if (l && r) return "N";
    if (l) return "L";
    if (r) return "R";
    return "P";
  }

  /// g <= h iff Right, moving first, loses h - g.
  bool leq(int g, int h) { return !right_first_wins(sum(h, neg(g))); }
  bool equal(int g, int h) { return outcome(sum(g, neg(h))) == "P"; }

  int height(int g) {
    int best = 0;
    for (int x : at(g).left) best = std::max(best, 1 + height(x));
    for (int x : at(g).right) best = std::max(best, 1 + height(x));
    return best;
  }

  // --- named values, built from their textbook definitions

  int integer(int n) {
    int g = zero_;
    for (int i = 0; i < n; ++i) g = make({g}, {});
    for (int i = 0; i > n; --i) g = make({}, {g});
    return g;
  }
  /// p / 2^q
  int dyadic(std::int64_t p, int q) {
    while (q > 0 && p % 2 == 0) {
      p /= 2;
      --q;
    }
    if (q == 0) return integer(static_cast<int>(p));
    return make({dyadic(p - 1, q)}, {dyadic(p + 1, q)});
  }
  int nimber(int n) {
    std::vector<int> opts;
    for (int i = 0; i < n; ++i) opts.push_back(nimber(i));
    return make(opts, opts);
  }
  int star() { return nimber(1); }
  int up() { return make({zero_}, {star()}); }
  int down() { return neg(up()); }
  int sw(int l, int r) { return make({l}, {r}); }
  /// {0 | {0 | -d}}
  int tiny(int d) { return make({zero_}, {make({zero_}, {neg(d)})}); }

  // --- bridge from the library

  int import(spg::GameContext& ctx, spg::GameId g) {
    const auto key = std::make_pair(static_cast<const void*>(&ctx), g.value);
    if (auto it = import_memo_.find(key); it != import_memo_.end()) return it->second;
    std::vector<int> l, r;
    const auto ls = ctx.left(g);
    const std::vector<spg::GameId> lv(ls.begin(), ls.end());
    const auto rs = ctx.right(g);
    const std::vector<spg::GameId> rv(rs.begin(), rs.end());
    for (auto x : lv) l.push_back(import(ctx, x));
    for (auto x : rv) r.push_back(import(ctx, x));
    const int id = make(l, r);
    import_memo_.emplace(key, id);
    return id;
  }

 private:
  std::vector<Game> nodes_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> intern_;
  std::map<Facets, int> complex_memo_;
  std::map<int, int> neg_memo_;
  std::map<std::pair<int, int>, int> sum_memo_;
  std::map<int, bool> lfw_, rfw_;
  std::map<std::pair<const void*, std::uint32_t>, int> import_memo_;
  int zero_ = 0;
};

/// Grundy value of an unlabeled complex by direct mex over links.
inline int grundy(const Facets& f, std::map<Facets, int>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  std::set<std::string> verts;
  for (const Face& face : f) verts.insert(face.begin(), face.end());
  std::set<int> seen;
  for (const std::string& v : verts) {
    std::vector<Face> link;
    for (const Face& face : f)
      if (face.contains(v)) {
        Face rest = face;
        rest.erase(v);
        link.push_back(rest);
      }
    seen.insert(grundy(maximal(link), memo));
  }
  int m = 0;
  while (seen.contains(m)) ++m;
  memo.emplace(f, m);
  return m;
}
inline int grundy(const Facets& f) {
  std::map<Facets, int> memo;
  return grundy(f, memo);
}

/// Maximal pairwise-compatible subsets by checking every subset.
inline std::vector<std::vector<std::size_t>> brute_maximal_cliques(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& ok) {
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool good = true;
    for (std::size_t i = 0; i < n && good; ++i)
      for (std::size_t j = i + 1; j < n && good; ++j)
        if ((s >> i & 1) && (s >> j & 1) && !ok(i, j)) good = false;
    if (good) cliques.push_back(s);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t s : cliques) {
    bool max = true;
    for (std::uint32_t t : cliques)
      if (t != s && (t & s) == s) max = false;
    if (!max) continue;
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) v.push_back(i);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
