#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "spgame/complex.hpp"
#include "spgame/game.hpp"

namespace spg {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CheckResult {
  std::string id;
  std::string name;
  std::string expected;
  std::string got;
  bool correct = false;      // outcome matched
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no limit
  bool passed() const { return correct && (limit_seconds <= 0 || seconds < limit_seconds); }
};

struct VerifyOptions {
  EngineOptions engine{};  // engine under test; expected values use a default engine
  std::uint64_t seed = kDefaultSeed;
  int property_cases = 200;
};

/// The regression suite: one result per claim, ids "1".."11", with
/// supplementary results suffixed "b".
std::vector<CheckResult> run_regression_checks(const VerifyOptions& opt);

/// Runs every `*.cx` file in `dir`. Each file holds a complex and a comment
/// `# expect: <game expression>`; `# mode: impartial` makes the expectation
/// a nimber `*n` for the Grundy value. Throws `Error` when the directory has
/// no fixtures.
std::vector<CheckResult> run_fixture_checks(const std::filesystem::path& dir,
                                            const EngineOptions& engine = {});

/// Table with one line per result; timings only when `timings` is set.
std::string format_report(const std::vector<CheckResult>& results, bool timings);

struct RandomComplexShape {
  int min_vertices = 1;
  int max_vertices = 6;
  int max_facets = 5;
  int max_facet_size = 4;
  bool labeled = true;  // x/y owners at random; otherwise impartial names v<i>
};

/// Random complex over vertices named x<i>/y<i> (or v<i>), normalized.
Complex random_complex(std::mt19937_64& rng, const RandomComplexShape& shape);
/// Random pure complex with facets of size `size` on `vertices` vertices.
Complex random_pure_complex(std::mt19937_64& rng, int vertices, int size, int facets, bool labeled);

}  // namespace spg
