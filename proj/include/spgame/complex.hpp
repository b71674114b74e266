#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spg {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed complex text; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Ownership of a basic position. `None` marks impartial vertices.
enum class Label : std::uint8_t { Left, Right, None };

inline Label opposite(Label l) {
  switch (l) {
    case Label::Left: return Label::Right;
    case Label::Right: return Label::Left;
    default: return Label::None;
  }
}

struct Vertex {
  std::string name;
  Label label = Label::None;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// How vertex names map to owners when reading text.
enum class Ownership : std::uint8_t {
  Partizan,   // `x...` is Left, `y...` is Right, anything else is rejected
  Impartial,  // any name, label None
};

/// Index into `Complex::vertices()`; vertices are sorted by name, so index
/// order is name order.
using VertexIndex = std::uint32_t;
using Face = std::vector<VertexIndex>;

/// A finite simplicial complex over labeled vertices, stored by its facets.
///
/// Values are immutable once built. Facets form an antichain, each facet is
/// sorted ascending, and the facet list is sorted by (size, lexicographic).
/// The vertex universe may hold vertices that lie in no facet; those
/// generate no moves.
///
/// The empty complex <> (no facets) and <∅> (one empty facet) are distinct
/// encodings of the same game.
class Complex {
 public:
  Complex() = default;

  /// Inclusion-maximal members of `raw_faces`, deduplicated. The universe is
  /// the union of all faces plus `extra_universe`. Throws `Error` when one
  /// name appears with two different labels.
  static Complex normalize(const std::vector<std::vector<Vertex>>& raw_faces,
                           const std::vector<Vertex>& extra_universe = {});

  /// Trusted construction: `vertices` sorted by name and unique, `facets`
  /// an antichain of sorted index lists.
  static Complex from_antichain(std::vector<Vertex> vertices, std::vector<Face> facets) {
    return from_sorted(std::move(vertices), std::move(facets), true);
  }

  /// Convenience for literals: owners follow the partizan name prefix rule.
  static Complex from_names(const std::vector<std::vector<std::string>>& raw_faces,
                            Ownership mode = Ownership::Partizan);

  static Complex parse(std::string_view text, Ownership mode = Ownership::Partizan);
  /// Canonical text form; `parse(serialize())` reproduces the complex.
  std::string serialize() const;

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Face> facets() const { return facets_; }
  const Vertex& vertex(VertexIndex i) const { return vertices_.at(i); }
  std::optional<VertexIndex> find(std::string_view name) const;

  /// Max facet size minus one; -1 when there are no nonempty facets.
  int dimension() const;
  bool is_pure() const;
  /// True when no move exists (<> or <∅>).
  bool is_terminal() const { return dimension() < 0; }
  /// Vertices that lie in at least one facet, ascending.
  std::vector<VertexIndex> support() const;
  bool is_impartial() const;

  /// Position reached by claiming `v`; nullopt when `v` lies in no facet
  /// (an illegal move, distinct from the terminal complex).
  std::optional<Complex> link(VertexIndex v) const;
  /// Throws `Error` for a name outside the universe.
  std::optional<Complex> link(std::string_view name) const;

  /// Swaps owners; names trade their x/y prefix to match.
  Complex negate_labels() const;
  /// Every vertex name gets `tag` inserted after its owner letter
  /// (`x1` -> `x<tag>_1`); impartial names get `<tag>_` prepended.
  Complex renamed(std::string_view tag) const;
  /// Drops labels, producing an impartial complex with the same faces.
  Complex unlabeled() const;

  /// Unique key for memo tables: serialization plus labels.
  std::string key() const;

  friend bool operator==(const Complex&, const Complex&) = default;

  /// Facet-wise union. Throws `Error` when the vertex names overlap.
  friend Complex join(const Complex& a, const Complex& b);

 private:
  static Complex from_sorted(std::vector<Vertex> vertices, std::vector<Face> faces, bool antichain);

  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

Complex join(const Complex& a, const Complex& b);

/// Splits `c` into its finest join factorization over the support. A complex
/// that is not a join yields a single factor equal to its support part;
/// terminal complexes yield no factors.
std::vector<Complex> join_factors(const Complex& c);

/// Connected components of the facet-intersection graph.
std::vector<Complex> connected_components(const Complex& c);

}  // namespace spg
