#include "spgame/constructions.hpp"

#include <string_view>

#include "spgame/values.hpp"

namespace spg {

namespace {

constexpr int kMaxParameter = 64;

void check_range(int v, int lo, std::string_view what) {
  if (v < lo || v > kMaxParameter)
    throw Error(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                std::to_string(kMaxParameter) + "]");
}

Vertex left(int i) { return {"x" + std::to_string(i), Label::Left}; }
Vertex right(int i) { return {"y" + std::to_string(i), Label::Right}; }

std::vector<Vertex> run(Vertex (*make)(int), int from, int to) {
  std::vector<Vertex> out;
  for (int i = from; i <= to; ++i) out.push_back(make(i));
  return out;
}

}  // namespace

Complex integer_simplex(int m, int n) {
  check_range(m, 0, "m");
  check_range(n, 0, "n");
  auto face = run(left, 1, m);
  auto ys = run(right, 1, n);
  face.insert(face.end(), ys.begin(), ys.end());
  return Complex::normalize({face});
}

Complex integer_at_dimension(int n, int k) {
  check_range(n, 0, "n");
  if (k < n + 1) throw Error("integer_at_dimension requires k >= n + 1");
  if (k > 20) throw Error("k too large");
  std::vector<std::vector<Vertex>> faces{run(left, 1, k + 1)};
  const Vertex y{"y", Label::Right};
  std::vector<int> idx(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    std::vector<Vertex> f;
    for (int i : idx) f.push_back(left(i));
    f.push_back(y);
    faces.push_back(std::move(f));
    // next (n+1)-combination of 1..k+1
    int pos = n;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k + 1 - (n - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j <= n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Complex::normalize(faces);
}

Complex fraction_complex(int n) {
  if (n < 0 || n > 16) throw Error("fraction exponent must lie in [0, 16]");
  const std::uint32_t count = 1u << n;
  std::vector<std::vector<Vertex>> faces;
  for (std::uint32_t i = 1; i <= count; ++i) {
    const std::uint32_t subset = i % count;
    std::vector<Vertex> f{left(static_cast<int>(i))};
    for (int j = 0; j < n; ++j)
      if (subset & (1u << j)) f.push_back(right(j + 1));
    faces.push_back(std::move(f));
  }
  return Complex::normalize(faces);
}

Complex dyadic_complex(std::int64_t p, int q) {
  if (q < 0 || q > 16) throw Error("dyadic exponent must lie in [0, 16]");
  if (q > 0 && p % 2 == 0) throw Error("dyadic_complex requires lowest terms");
  if (p < -kMaxParameter || p > kMaxParameter) throw Error("dyadic numerator too large");
  if (p == 0) return Complex::normalize({{}});
  const Complex unit = fraction_complex(q);
  const auto copies = p < 0 ? -p : p;
  Complex out = copies == 1 ? unit : unit.renamed("1");
  for (std::int64_t i = 2; i <= copies; ++i) out = join(out, unit.renamed(std::to_string(i)));
  return p < 0 ? out.negate_labels() : out;
}

Complex switch_symmetric(int a, int b, bool connected) {
  check_range(a, 0, "a");
  check_range(b, 0, "b");
  std::vector<std::vector<Vertex>> faces{run(left, 0, a), run(right, 0, b)};
  if (connected) faces.push_back({left(0), right(0)});
  return Complex::normalize(faces);
}

Complex switch_general(int a, int b) {
  check_range(b, 0, "b");
  if (a <= b) throw Error("switch_general requires a > b");
  check_range(a, 1, "a");
  auto second = run(left, 1, b);
  second.push_back({"y", Label::Right});
  return Complex::normalize({run(left, 1, a + 1), second});
}

Complex tiny_complex(int n) {
  check_range(n, 1, "n");
  std::vector<std::vector<Vertex>> faces{run(right, 1, n + 1)};
  for (int i = 1; i <= n + 1; ++i) faces.push_back({left(1), right(i)});
  faces.push_back({left(2)});
  return Complex::normalize(faces);
}

std::vector<CatalogEntry> birthday2_catalog() {
  struct Raw {
    const char* name;
    std::vector<std::vector<std::string>> facets;
    const char* expected;
  };
  const std::vector<Raw> raw = {
      {"two", {{"x1", "x2"}}, "2"},
      {"zero", {{"x1", "y1"}}, "0"},
      {"one-star", {{"x1", "x2"}, {"x1", "y1"}}, "1*"},
      {"plus-minus-one", {{"x1", "x2"}, {"y1", "y2"}}, "{1|-1}"},
      {"one-over-star", {{"x1", "x2"}, {"x2", "y1"}, {"y1", "y2"}, {"y2", "x3"}}, "{1|*}"},
      {"one-over-zero", {{"x1", "x2"}, {"y1"}}, "{1|0}"},
      {"half", {{"x1", "y1"}, {"x2"}}, "1/2"},
      {"star", {{"x1", "y1"}, {"x2"}, {"y2"}}, "*"},
      {"star-two",
       {{"x1", "y1"}, {"y1", "y2"}, {"y2", "x2"}, {"x2", "x3"}, {"x3", "y3"}, {"x4"}, {"y4"}},
       "*2"},
      {"up", {{"x1", "y1"}, {"y1", "y2"}, {"y2", "x2"}, {"x2", "x3"}, {"x3", "y3"}, {"x4"}}, "^"},
      {"one-over-zero-star",
       {{"x1", "x2"}, {"x2", "y1"}, {"y1", "y2"}, {"y2", "x3"}, {"y3"}},
       "{1|0,*}"},
      {"up-star", {{"x1", "y1"}, {"x1", "x2"}, {"x2", "y1"}, {"y2"}, {"x3"}}, "^*"},
  };
  std::vector<CatalogEntry> out;
  for (const auto& r : raw) out.push_back({r.name, Complex::from_names(r.facets), r.expected, false});
  const std::size_t base = out.size();
  for (std::size_t i = 0; i < base; ++i)
    out.push_back({"neg-" + out[i].name, out[i].complex.negate_labels(), out[i].expected, true});
  return out;
}

GameId expected_value(GameContext& ctx, const CatalogEntry& e) {
  GameId g = ctx.canonical(parse_game(ctx, e.expected));
  return e.negated ? ctx.canonical(ctx.negate(g)) : g;
}

}  // namespace spg
