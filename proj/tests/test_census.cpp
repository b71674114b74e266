#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "spgame/census.hpp"

using namespace spg;

namespace {

// Isomorphism classes counted by brute force: every antichain of faces on
// k Left and m Right vertices covering all of them, reduced to the least
// image under all owner-preserving permutations.
std::uint64_t brute_classes(int max_vertices, int max_dim, int min_dim) {
  std::uint64_t total = 0;
  for (int n = 0; n <= max_vertices; ++n) {
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f = 1; f < (1u << n); ++f)
      if (std::popcount(f) <= max_dim + 1) faces.push_back(f);
    for (int k = 0; k <= n; ++k) {
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<int> perm(static_cast<std::size_t>(n));
      const std::size_t count = faces.size();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << count); ++s) {
        std::vector<std::uint32_t> chosen;
        std::uint32_t cover = 0;
        for (std::size_t i = 0; i < count; ++i)
          if (s >> i & 1) {
            chosen.push_back(faces[i]);
            cover |= faces[i];
          }
        if (cover != (1u << n) - 1) continue;
        bool antichain = true;
        int dim = -1;
        for (auto a : chosen) {
          dim = std::max(dim, std::popcount(a) - 1);
          for (auto b : chosen)
            if (a != b && (a & b) == a) antichain = false;
        }
        if (!antichain || dim < min_dim) continue;
        // least image over permutations fixing the owner split at k
        std::vector<std::uint32_t> best;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool keeps = true;
          for (int i = 0; i < n; ++i)
            if ((i < k) != (perm[static_cast<std::size_t>(i)] < k)) keeps = false;
          if (!keeps) continue;
          std::vector<std::uint32_t> img;
          for (auto f : chosen) {
            std::uint32_t g = 0;
            for (int i = 0; i < n; ++i)
              if (f >> i & 1) g |= 1u << perm[static_cast<std::size_t>(i)];
            img.push_back(g);
          }
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best) best = img;
        } while (std::next_permutation(perm.begin(), perm.end()));
        seen.insert(best);
      }
      total += seen.size();
    }
  }
  return total;
}

CensusOptions opts(int v, int d, int min_dim = -1, int workers = 1) {
  CensusOptions o;
  o.max_vertices = v;
  o.max_dim = d;
  o.min_dim = min_dim;
  o.workers = workers;
  return o;
}

}  // namespace

TEST_CASE("class counts match brute-force isomorphism reduction") {
  CHECK(enumerate_complexes(opts(3, 2)).size() == brute_classes(3, 2, -1));
  CHECK(enumerate_complexes(opts(4, 1)).size() == brute_classes(4, 1, -1));
  CHECK(enumerate_complexes(opts(4, 1, 1)).size() == brute_classes(4, 1, 1));
  CHECK(enumerate_complexes(opts(4, 3)).size() == brute_classes(4, 3, -1));
  CHECK(brute_classes(5, 1, -1) == 663);
}

TEST_CASE("dimension-0 census gives exactly 0, 1, -1, *") {
  const CensusReport r = run_census(opts(5, 0));
  std::set<std::string> values;
  for (const auto& [v, s] : r.values) values.insert(v);
  CHECK(values == std::set<std::string>{"0", "1", "-1", "*"});
  CHECK(r.values.at("0").dimensions == std::vector<int>{-1});
}

TEST_CASE("dimension-1 complexes never take the values 1 or -1") {
  const CensusReport r = run_census(opts(5, 1, 1));
  CHECK_FALSE(r.values.contains("1"));
  CHECK_FALSE(r.values.contains("-1"));
  CHECK(r.values.contains("0"));
  CHECK(r.classes == 642);
  const CensusReport all = run_census(opts(5, 1));
  CHECK(all.classes == 663);
  CHECK(all.values.size() == 21);
}

TEST_CASE("worker count does not change the report") {
  const CensusReport a = run_census(opts(5, 1, -1, 1));
  const CensusReport b = run_census(opts(5, 1, -1, 4));
  CHECK(a.classes == b.classes);
  REQUIRE(a.values.size() == b.values.size());
  for (const auto& [v, s] : a.values) {
    REQUIRE(b.values.contains(v));
    CHECK(b.values.at(v).count == s.count);
    CHECK(b.values.at(v).dimensions == s.dimensions);
    CHECK(b.values.at(v).witness == s.witness);
  }
}

TEST_CASE("bounds") {
  CHECK_NOTHROW(check_census_bounds(opts(6, 1)));
  CHECK_THROWS_AS(check_census_bounds(opts(7, 1)), Error);
  CHECK_THROWS_AS(check_census_bounds(opts(6, 2)), Error);
  CHECK_NOTHROW(check_census_bounds(opts(5, 4)));
}
