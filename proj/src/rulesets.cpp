#include "spgame/rulesets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace spg {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(0, "board spec: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

void require_size(int n, std::string_view what) {
  if (n < 0) throw Error(std::string(what) + " must be nonnegative");
}

}  // namespace

// ---------------------------------------------------------------------------
// Board

Board Board::graph(int n, std::vector<std::pair<int, int>> edges) {
  require_size(n, "vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("board graphs have no loops");
    if (u > v) std::swap(u, v);
    seen.emplace(u, v);
  }
  Board b;
  b.kind_ = Kind::Graph;
  b.n_ = n;
  b.edges_.assign(seen.begin(), seen.end());
  return b;
}

Board Board::path(int n) {
  require_size(n, "path length");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return graph(n, std::move(e));
}

Board Board::cycle(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return graph(n, std::move(e));
}

Board Board::complete(int n) {
  require_size(n, "vertex count");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return graph(n, std::move(e));
}

Board Board::grid(int rows, int cols, std::vector<Cell> removed) {
  require_size(rows, "grid rows");
  require_size(cols, "grid cols");
  for (auto [r, c] : removed)
    if (r < 0 || c < 0 || r >= rows || c >= cols) throw Error("mask cell outside the grid");
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  Board b;
  b.kind_ = Kind::Grid;
  b.rows_ = rows;
  b.cols_ = cols;
  b.removed_ = std::move(removed);
  return b;
}

Board Board::parse_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "board spec needs '<kind>:<args>'");
  const std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (kind == "path") return path(parse_int(rest, "length"));
  if (kind == "cycle") return cycle(parse_int(rest, "length"));
  if (kind == "complete") return complete(parse_int(rest, "size"));
  if (kind == "graph") {
    std::ifstream in{std::string(rest)};
    if (!in) throw Error("cannot open graph file '" + std::string(rest) + "'");
    int n = 0;
    if (!(in >> n)) throw ParseError(1, "graph file must start with the vertex count");
    std::vector<std::pair<int, int>> e;
    int u = 0, v = 0;
    while (in >> u >> v) e.emplace_back(u, v);
    if (!in.eof()) throw ParseError(0, "graph file: malformed edge list");
    return graph(n, std::move(e));
  }
  if (kind == "grid") {
    std::string_view dims = rest;
    std::vector<Cell> removed;
    if (auto c2 = rest.find(':'); c2 != std::string_view::npos) {
      dims = rest.substr(0, c2);
      std::string_view mask = rest.substr(c2 + 1);
      if (!mask.starts_with("mask=")) throw ParseError(0, "grid option must be 'mask='");
      mask.remove_prefix(5);
      while (!mask.empty()) {
        auto semi = mask.find(';');
        std::string_view cell = mask.substr(0, semi);
        auto comma = cell.find(',');
        if (comma == std::string_view::npos) throw ParseError(0, "mask cell must be 'r,c'");
        removed.emplace_back(parse_int(cell.substr(0, comma), "mask row"),
                             parse_int(cell.substr(comma + 1), "mask col"));
        if (semi == std::string_view::npos) break;
        mask.remove_prefix(semi + 1);
      }
    }
    auto x = dims.find('x');
    if (x == std::string_view::npos) throw ParseError(0, "grid spec must be '<r>x<c>'");
    return grid(parse_int(dims.substr(0, x), "rows"), parse_int(dims.substr(x + 1), "cols"),
                std::move(removed));
  }
  throw ParseError(0, "unknown board kind '" + std::string(kind) + "'");
}

bool Board::live(int r, int c) const {
  if (kind_ != Kind::Grid || r < 0 || c < 0 || r >= rows_ || c >= cols_) return false;
  return !std::binary_search(removed_.begin(), removed_.end(), Cell{r, c});
}

int Board::vertex_count() const {
  if (kind_ == Kind::Graph) return n_;
  return rows_ * cols_ - static_cast<int>(removed_.size());
}

std::vector<std::pair<int, int>> Board::edges() const {
  if (kind_ == Kind::Graph) return edges_;
  std::vector<int> id(static_cast<std::size_t>(rows_ * cols_), 0);
  int next = 0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (live(r, c)) id[static_cast<std::size_t>(r * cols_ + c)] = ++next;
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (!live(r, c)) continue;
      const int here = id[static_cast<std::size_t>(r * cols_ + c)];
      if (live(r, c + 1)) e.emplace_back(here, id[static_cast<std::size_t>(r * cols_ + c + 1)]);
      if (live(r + 1, c)) e.emplace_back(here, id[static_cast<std::size_t>((r + 1) * cols_ + c)]);
    }
  std::sort(e.begin(), e.end());
  return e;
}

// ---------------------------------------------------------------------------
// Facet enumeration

namespace {

struct CliqueSearch {
  const std::vector<std::vector<char>>& adj;
  std::vector<std::vector<std::size_t>>& out;

  void run(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
    if (p.empty()) {
      if (x.empty()) out.push_back(r);
      return;
    }
    // pivot: most neighbours inside p, lowest index on ties
    std::size_t pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&p, &x})
      for (std::size_t u : *set) {
        std::size_t deg = 0;
        for (std::size_t w : p) deg += adj[u][w] ? 1 : 0;
        if (first || deg > best || (deg == best && u < pivot)) {
          pivot = u;
          best = deg;
          first = false;
        }
      }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p)
      if (!adj[pivot][v]) candidates.push_back(v);
    for (std::size_t v : candidates) {
      std::vector<std::size_t> p2, x2;
      for (std::size_t w : p)
        if (adj[v][w]) p2.push_back(w);
      for (std::size_t w : x)
        if (adj[v][w]) x2.push_back(w);
      r.push_back(v);
      run(r, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
  }
};

void sort_sets(std::vector<std::vector<std::size_t>>& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
}

Complex complex_of(std::span<const BasicPosition> positions,
                   const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<Vertex> universe;
  for (const auto& p : positions) universe.push_back({p.name, p.player});
  std::vector<std::vector<Vertex>> faces;
  for (const auto& s : sets) {
    std::vector<Vertex> f;
    for (std::size_t i : s) f.push_back(universe[i]);
    faces.push_back(std::move(f));
  }
  return Complex::normalize(faces, universe);
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& compatible) {
  std::vector<std::vector<char>> adj(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) adj[i][j] = adj[j][i] = compatible(i, j) ? 1 : 0;
  std::vector<std::vector<std::size_t>> out;
  if (count == 0) return {{}};  // the empty set is the one maximal clique
  std::vector<std::size_t> r, p(count);
  for (std::size_t i = 0; i < count; ++i) p[i] = i;
  CliqueSearch{adj, out}.run(r, std::move(p), {});
  sort_sets(out);
  return out;
}

std::vector<std::vector<std::size_t>> maximal_legal_sets(std::size_t count, const SetRule& legal) {
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;  // always sorted
  auto legal_with = [&](std::size_t i) {
    std::vector<std::size_t> s = current;
    s.insert(std::upper_bound(s.begin(), s.end(), i), i);
    return legal(s);
  };
  // hereditary, so every legal set is reached by adding indices in increasing order
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    bool maximal = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (std::binary_search(current.begin(), current.end(), i) || !legal_with(i)) continue;
      maximal = false;
      if (i < start) continue;
      current.push_back(i);
      extend(i + 1);
      current.pop_back();
    }
    if (maximal) found.push_back(current);
  };
  if (legal(current)) extend(0);
  sort_sets(found);
  return found;
}

Complex maximal_compatible_sets(std::span<const BasicPosition> positions, const PairRule& rule) {
  auto sets = maximal_cliques(positions.size(), [&](std::size_t i, std::size_t j) {
    return rule(positions[i], positions[j]);
  });
  return complex_of(positions, sets);
}

Complex maximal_legal_complex(std::span<const BasicPosition> positions, const SetRule& rule) {
  return complex_of(positions, maximal_legal_sets(positions.size(), rule));
}

// ---------------------------------------------------------------------------
// Rulesets

namespace {

std::vector<BasicPosition> single_vertex_positions(const Board& b) {
  std::vector<BasicPosition> out;
  for (int v = 1; v <= b.vertex_count(); ++v)
    for (Label l : {Label::Left, Label::Right})
      out.push_back({l, {v}, (l == Label::Left ? "x" : "y") + std::to_string(v)});
  return out;
}

Complex adjacency_ruleset(const Board& b, bool forbid_same_player) {
  const auto positions = single_vertex_positions(b);
  const auto edge_list = b.edges();
  const std::set<std::pair<int, int>> edges(edge_list.begin(), edge_list.end());
  auto adjacent = [&](int u, int v) { return edges.contains({std::min(u, v), std::max(u, v)}); };
  return maximal_compatible_sets(positions, [&](const BasicPosition& p, const BasicPosition& q) {
    const int u = p.footprint[0], v = q.footprint[0];
    if (u == v) return false;
    if (!adjacent(u, v)) return true;
    return forbid_same_player ? p.player != q.player : p.player == q.player;
  });
}

bool disjoint(const BasicPosition& p, const BasicPosition& q) {
  std::vector<int> common;
  std::set_intersection(p.footprint.begin(), p.footprint.end(), q.footprint.begin(),
                        q.footprint.end(), std::back_inserter(common));
  return common.empty();
}

}  // namespace

Complex snort_complex(const Board& b) { return adjacency_ruleset(b, false); }

Complex col_complex(const Board& b) { return adjacency_ruleset(b, true); }

Complex domineering_complex(const Board& b) {
  if (b.kind() != Board::Kind::Grid) throw Error("domineering needs a grid board");
  std::vector<BasicPosition> positions;
  auto cell = [&](int r, int c) { return r * b.cols() + c; };
  auto tag = [](int r, int c) { return std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      if (b.live(r, c) && b.live(r + 1, c))
        positions.push_back({Label::Left, {cell(r, c), cell(r + 1, c)}, "xV" + tag(r, c)});
      if (b.live(r, c) && b.live(r, c + 1))
        positions.push_back({Label::Right, {cell(r, c), cell(r, c + 1)}, "yH" + tag(r, c)});
    }
  return maximal_compatible_sets(positions, disjoint);
}

Complex nim_pile_complex(int n) {
  if (n < 1) throw Error("nim pile size must be at least 1");
  if (n > 12) throw Error("nim pile size too large");
  std::vector<BasicPosition> positions;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    BasicPosition p;
    p.player = Label::None;
    std::string members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        p.footprint.push_back(i + 1);
        members += (members.empty() ? "" : "-") + std::to_string(i + 1);
      }
    p.name = "K" + std::to_string(p.footprint.size()) + "_" + members;
    positions.push_back(std::move(p));
  }
  std::sort(positions.begin(), positions.end(), [](const auto& a, const auto& b) {
    return std::pair(a.footprint.size(), a.footprint) < std::pair(b.footprint.size(), b.footprint);
  });
  return maximal_compatible_sets(positions, disjoint);
}

}  // namespace spg
