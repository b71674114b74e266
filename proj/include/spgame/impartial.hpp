#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "spgame/complex.hpp"
#include "spgame/game.hpp"

namespace spg {

/// A legal complex without ownership labels.
class ImpartialComplex {
 public:
  ImpartialComplex() = default;
  /// Drops any labels of `c`.
  explicit ImpartialComplex(const Complex& c) : c_(c.unlabeled()) {}
  static ImpartialComplex parse(std::string_view text) {
    return ImpartialComplex(Complex::parse(text, Ownership::Impartial));
  }

  const Complex& complex() const { return c_; }

  friend bool operator==(const ImpartialComplex&, const ImpartialComplex&) = default;

 private:
  Complex c_;
};

int mex(std::span<const int> values);

/// Grundy values with a memo keyed on the complex serialization.
class GrundySolver {
 public:
  int grundy(const ImpartialComplex& c) { return grundy(c.complex()); }
  int grundy(const Complex& c);

 private:
  std::unordered_map<std::string, int> memo_;
};

int grundy(const ImpartialComplex& c);

enum class StructuralRule : std::uint8_t {
  AllFacetsEven,  // every facet has even size: 0
  Pure,           // pure with facet size s: s mod 2
  DisjointPure,   // disjoint union of pure pieces: 0, * or *2
};
std::string_view to_string(StructuralRule r);

struct StructuralPrediction {
  int grundy;
  StructuralRule rule;
};

/// Grundy value forced by the facet structure alone, if any rule applies.
std::optional<StructuralPrediction> predict_structural(const ImpartialComplex& c);

/// Partizan complex where each position p becomes x<p> and y<p>; a labeled
/// set is a face when its positions are distinct and form a face of `c`.
Complex doubled_partizan(const ImpartialComplex& c);

/// Whether the canonical value of doubled_partizan(c) is *grundy(c).
bool grundy_value_crosscheck(GameContext& ctx, const ImpartialComplex& c);

}  // namespace spg
