#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spgame/complex.hpp"

namespace spg {

/// A simple undirected graph or a rectangular grid with removed cells.
/// Graph vertices are numbered 1..n; grid cells are (row, col), 0-based.
class Board {
 public:
  enum class Kind : std::uint8_t { Graph, Grid };
  using Cell = std::pair<int, int>;

  static Board graph(int n, std::vector<std::pair<int, int>> edges);
  static Board path(int n);
  static Board cycle(int n);
  static Board complete(int n);
  static Board grid(int rows, int cols, std::vector<Cell> removed = {});
  /// `path:<n>`, `cycle:<n>`, `complete:<n>`, `grid:<r>x<c>[:mask=r,c;r,c]`,
  /// `graph:<file>` (file: vertex count, then one `u v` edge per line).
  static Board parse_spec(std::string_view spec);

  Kind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool live(int r, int c) const;

  /// Graph view: vertex count and 1-based edges. Grid cells are numbered
  /// row-major over live cells.
  int vertex_count() const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  Kind kind_ = Kind::Graph;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> removed_;
};

struct BasicPosition {
  Label player = Label::None;
  std::vector<int> footprint;  // sorted board vertex ids
  std::string name;
};

using PairRule = std::function<bool(const BasicPosition&, const BasicPosition&)>;
/// Legality of a whole set of positions, given by indices. Must be
/// hereditary: every subset of a legal set is legal.
using SetRule = std::function<bool(std::span<const std::size_t>)>;

/// Maximal cliques of the compatibility graph on `count` items, each sorted,
/// listed in lexicographic order. Bron-Kerbosch with pivoting.
std::vector<std::vector<std::size_t>> maximal_cliques(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& compatible);

/// Maximal legal sets under a hereditary whole-set predicate, by depth-first
/// extension. Exponential; intended for small inputs.
std::vector<std::vector<std::size_t>> maximal_legal_sets(std::size_t count, const SetRule& legal);

/// Complex whose facets are the maximal pairwise-compatible sets. Every
/// position joins the vertex universe.
Complex maximal_compatible_sets(std::span<const BasicPosition> positions, const PairRule& rule);
Complex maximal_legal_complex(std::span<const BasicPosition> positions, const SetRule& rule);

Complex snort_complex(const Board& b);
Complex col_complex(const Board& b);
/// Left plays vertical dominoes `xV<r>_<c>`, Right horizontal `yH<r>_<c>`.
/// Throws `Error` for a graph board.
Complex domineering_complex(const Board& b);
/// Impartial: pieces K_l on l-subsets of K_n, named `K<l>_<i>-<j>-...`.
Complex nim_pile_complex(int n);

}  // namespace spg
