#include "spgame/impartial.hpp"

#include <algorithm>
#include <vector>

#include "spgame/values.hpp"

namespace spg {

int mex(std::span<const int> values) {
  std::vector<int> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  int m = 0;
  for (int x : v) {
    if (x == m) ++m;
    else if (x > m) break;
  }
  return m;
}

int GrundySolver::grundy(const Complex& c) {
  const std::string key = c.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<int> options;
  for (VertexIndex v : c.support()) options.push_back(grundy(*c.link(v)));
  const int g = mex(options);
  memo_.emplace(key, g);
  return g;
}

int grundy(const ImpartialComplex& c) { return GrundySolver{}.grundy(c); }

std::string_view to_string(StructuralRule r) {
  switch (r) {
    case StructuralRule::AllFacetsEven: return "all facets have even size";
    case StructuralRule::Pure: return "pure complex";
    case StructuralRule::DisjointPure: return "disjoint union of pure complexes";
  }
  return "";
}

std::optional<StructuralPrediction> predict_structural(const ImpartialComplex& ic) {
  const Complex& c = ic.complex();
  const auto facets = c.facets();
  if (std::all_of(facets.begin(), facets.end(), [](const Face& f) { return f.size() % 2 == 0; }))
    return StructuralPrediction{0, StructuralRule::AllFacetsEven};
  if (c.is_pure()) return StructuralPrediction{static_cast<int>(facets[0].size() % 2), StructuralRule::Pure};
  bool odd_size = false, even_size = false;
  for (const Complex& part : connected_components(c)) {
    if (!part.is_pure()) return std::nullopt;
    (part.facets()[0].size() % 2 ? odd_size : even_size) = true;
  }
  // moves in an odd-size piece reach 0, in an even-size piece reach *
  const int g = odd_size && even_size ? 2 : (odd_size ? 1 : 0);
  return StructuralPrediction{g, StructuralRule::DisjointPure};
}

Complex doubled_partizan(const ImpartialComplex& ic) {
  const Complex& c = ic.complex();
  std::vector<Vertex> universe;
  for (const Vertex& v : c.vertices()) {
    universe.push_back({"x" + v.name, Label::Left});
    universe.push_back({"y" + v.name, Label::Right});
  }
  std::vector<std::vector<Vertex>> faces;
  for (const Face& f : c.facets()) {
    if (f.size() > 20) throw Error("facet too large to double");
    for (std::uint32_t mask = 0; mask < (1u << f.size()); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const bool right = mask & (1u << i);
        face.push_back(universe[2 * f[i] + (right ? 1 : 0)]);
      }
      faces.push_back(std::move(face));
    }
  }
  return Complex::normalize(faces, universe);
}

bool grundy_value_crosscheck(GameContext& ctx, const ImpartialComplex& c) {
  return ctx.evaluate(doubled_partizan(c)) == make_nimber(ctx, grundy(c));
}

}  // namespace spg
