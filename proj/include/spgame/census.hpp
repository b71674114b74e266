#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spgame/complex.hpp"
#include "spgame/game.hpp"

namespace spg {

struct CensusOptions {
  int max_vertices = 0;
  int max_dim = 0;
  int min_dim = -1;  // complexes of smaller dimension are skipped
  int workers = 1;
  EngineOptions engine{};
};

struct ValueStats {
  std::uint64_t count = 0;          // isomorphism classes with this value
  std::vector<int> dimensions;      // sorted, distinct
  Complex witness;                  // fewest vertices, then smallest serialization
};

struct CensusReport {
  CensusOptions options;
  std::uint64_t classes = 0;  // isomorphism classes evaluated
  /// Keyed by the machine rendering of the recognized value.
  std::map<std::string, ValueStats> values;
  double seconds = 0;
};

/// Throws `Error` with a size estimate when the bounds are beyond desk
/// scale: more than 6 vertices for dimension <= 1, more than 5 otherwise.
void check_census_bounds(const CensusOptions& opt);

/// Every labeled complex whose facets cover exactly its vertices, with at
/// most `max_vertices` vertices and dimension in [min_dim, max_dim], one
/// per label-preserving isomorphism class. Vertices are x1..xk, y1..ym.
std::vector<Complex> enumerate_complexes(const CensusOptions& opt);

CensusReport run_census(const CensusOptions& opt);

}  // namespace spg
