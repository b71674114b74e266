#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spgame/complex.hpp"
#include "spgame/game.hpp"

namespace spg {

/// One facet {x1..xm, y1..yn}; value m - n.
Complex integer_simplex(int m, int n);
/// Dimension k, value n: the Left simplex on x1..x(k+1) plus every
/// (n+1)-subset of those vertices extended by `y`. Requires k >= n + 1.
Complex integer_at_dimension(int n, int k);
/// Facets {x_i} with S_i, S_i running over subsets of {y1..yn} in binary
/// counting order with the empty set last; value 1/2^n.
Complex fraction_complex(int n);
/// |p| renamed copies of fraction_complex(q) joined, negated when p < 0;
/// value p/2^q. Requires lowest terms.
Complex dyadic_complex(std::int64_t p, int q);
/// {x0..xa} and {y0..yb}; value {a|-b}. The optional face {x0,y0} keeps
/// the value only when a, b >= 1.
Complex switch_symmetric(int a, int b, bool connected = false);
/// {x1..x(a+1)} and {x1..xb, y}; value {a|b}. Requires a > b >= 0.
Complex switch_general(int a, int b);
/// {y1..y(n+1)}, {x1,y_i} for each i, {x2}. Requires n >= 1. Evaluates to
/// +_(n-1): after Right moves, n Right vertices remain, not n+1.
Complex tiny_complex(int n);

struct CatalogEntry {
  std::string name;
  Complex complex;
  std::string expected;  // game expression accepted by parse_game
  bool negated = false;  // value is minus `expected`
};

/// The twelve birthday-2 witnesses followed by their label-negated twins.
std::vector<CatalogEntry> birthday2_catalog();
/// Canonical form of the entry's stated value.
GameId expected_value(GameContext& ctx, const CatalogEntry& e);

}  // namespace spg
