#include "spgame/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "spgame/game.hpp"
#include "spgame/values.hpp"

namespace spg {

namespace {

using Mask = std::uint32_t;

int vertex_limit(int max_dim) { return max_dim <= 1 ? 6 : 5; }

std::uint64_t face_count(int n, int max_dim) {
  std::uint64_t total = 0, binom = 1;
  for (int i = 1; i <= n; ++i) {
    binom = binom * static_cast<std::uint64_t>(n - i + 1) / static_cast<std::uint64_t>(i);
    if (i <= max_dim + 1) total += binom;
  }
  return total;
}

struct Labeling {
  int n;
  int left;  // vertices [0, left) are Left
};

std::vector<Mask> canonical_masks(const std::vector<Mask>& facets, Labeling lab) {
  const int n = lab.n;
  // invariant: owner, then sorted sizes of the facets through the vertex
  std::vector<std::pair<std::vector<int>, int>> inv(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& sizes = inv[static_cast<std::size_t>(v)].first;
    sizes.push_back(v < lab.left ? 0 : 1);
    std::vector<int> through;
    for (Mask f : facets)
      if (f & (Mask{1} << v)) through.push_back(std::popcount(f));
    std::sort(through.begin(), through.end());
    sizes.insert(sizes.end(), through.begin(), through.end());
    inv[static_cast<std::size_t>(v)].second = v;
  }
  std::sort(inv.begin(), inv.end());
  // blocks of equal invariants; positions are indices into `inv`
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[static_cast<std::size_t>(j)].first == inv[static_cast<std::size_t>(i)].first) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> order(static_cast<std::size_t>(n));  // order[pos] = original vertex
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i)].second;
  for (auto [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);

  std::vector<Mask> best;
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::vector<Mask> mapped(facets.size());
  auto evaluate = [&] {
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      Mask m = 0;
      for (int v = 0; v < n; ++v)
        if (facets[i] & (Mask{1} << v)) m |= Mask{1} << pos[static_cast<std::size_t>(v)];
      mapped[i] = m;
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  };
  // odometer over the permutations of every block
  std::function<void(std::size_t)> walk = [&](std::size_t b) {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + blocks[b].first;
    auto last = order.begin() + blocks[b].second;
    do walk(b + 1);
    while (std::next_permutation(first, last));
  };
  walk(0);
  return best;
}

Complex build(const std::vector<Mask>& facets, Labeling lab) {
  auto vertex = [&](int v) -> Vertex {
    if (v < lab.left) return {"x" + std::to_string(v + 1), Label::Left};
    return {"y" + std::to_string(v - lab.left + 1), Label::Right};
  };
  std::vector<std::vector<Vertex>> faces;
  for (Mask f : facets) {
    std::vector<Vertex> face;
    for (int v = 0; v < lab.n; ++v)
      if (f & (Mask{1} << v)) face.push_back(vertex(v));
    faces.push_back(std::move(face));
  }
  return Complex::normalize(faces);
}

void enumerate_labeling(Labeling lab, const CensusOptions& opt, std::vector<Complex>& out) {
  const int n = lab.n;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> faces;
  for (Mask m = 1; m <= full; ++m)
    if (std::popcount(m) <= opt.max_dim + 1) faces.push_back(m);
  std::set<std::vector<Mask>> seen;
  std::vector<Mask> chosen;
  std::function<void(std::size_t, Mask)> dfs = [&](std::size_t i, Mask covered) {
    if (i == faces.size()) {
      if (covered != full) return;
      int dim = -1;
      for (Mask f : chosen) dim = std::max(dim, std::popcount(f) - 1);
      if (dim < opt.min_dim || dim > opt.max_dim) return;
      auto key = canonical_masks(chosen, lab);
      if (seen.insert(key).second) out.push_back(build(key, lab));
      return;
    }
    dfs(i + 1, covered);
    const Mask f = faces[i];
    for (Mask c : chosen)
      if ((c & f) == c || (c & f) == f) return;
    chosen.push_back(f);
    dfs(i + 1, covered | f);
    chosen.pop_back();
  };
  dfs(0, 0);
}

bool better_witness(const Complex& a, const Complex& b) {
  if (a.vertices().size() != b.vertices().size()) return a.vertices().size() < b.vertices().size();
  return a.serialize() < b.serialize();
}

void record(std::map<std::string, ValueStats>& into, const std::string& value, int dim,
            const Complex& witness, std::uint64_t count) {
  auto [it, fresh] = into.try_emplace(value);
  ValueStats& s = it->second;
  s.count += count;
  auto d = std::lower_bound(s.dimensions.begin(), s.dimensions.end(), dim);
  if (d == s.dimensions.end() || *d != dim) s.dimensions.insert(d, dim);
  if (fresh || better_witness(witness, s.witness)) s.witness = witness;
}

}  // namespace

void check_census_bounds(const CensusOptions& opt) {
  if (opt.max_vertices < 0) throw Error("max vertices must be nonnegative");
  if (opt.max_dim < -1) throw Error("max dimension must be at least -1");
  if (opt.workers < 1) throw Error("workers must be at least 1");
  const int limit = vertex_limit(opt.max_dim);
  if (opt.max_vertices > limit) {
    const auto faces = face_count(opt.max_vertices, opt.max_dim);
    std::ostringstream msg;
    msg << "census too large: " << opt.max_vertices << " vertices at dimension <= " << opt.max_dim
        << " allows " << faces << " candidate faces, i.e. up to 2^" << faces
        << " facet sets per labeling (limit is " << limit << " vertices)";
    throw Error(msg.str());
  }
}

std::vector<Complex> enumerate_complexes(const CensusOptions& opt) {
  check_census_bounds(opt);
  std::vector<Complex> out;
  for (int n = 0; n <= opt.max_vertices; ++n)
    for (int left = n; left >= 0; --left) enumerate_labeling({n, left}, opt, out);
  return out;
}

CensusReport run_census(const CensusOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Complex> complexes = enumerate_complexes(opt);
  const int workers = std::min<int>(opt.workers, std::max<int>(1, static_cast<int>(complexes.size())));
  std::vector<std::map<std::string, ValueStats>> partial(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t w) {
    GameContext ctx(opt.engine);
    for (std::size_t i = next++; i < complexes.size(); i = next++) {
      const Complex& c = complexes[i];
      const GameId g = ctx.evaluate(c);
      record(partial[w], render_value(recognize(ctx, g), RenderStyle::Machine), c.dimension(), c, 1);
    }
  };
  {
    std::vector<std::jthread> threads;
    for (int w = 1; w < workers; ++w) threads.emplace_back(work, static_cast<std::size_t>(w));
    work(0);
  }
  CensusReport report;
  report.options = opt;
  report.classes = complexes.size();
  for (const auto& part : partial)
    for (const auto& [value, stats] : part)
      for (int d : stats.dimensions) record(report.values, value, d, stats.witness, 0);
  for (const auto& part : partial)
    for (const auto& [value, stats] : part) report.values[value].count += stats.count;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace spg
