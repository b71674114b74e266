#include "spgame/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace spg {

namespace {

bool facet_order(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Keeps the inclusion-maximal faces. Faces must be sorted and duplicate free.
std::vector<Face> maximal_faces(std::vector<Face> faces, std::size_t universe_size) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<Face> kept;
  if (universe_size <= 64) {
    std::vector<std::uint64_t> masks;
    for (auto& f : faces) {
      std::uint64_t m = 0;
      for (VertexIndex v : f) m |= std::uint64_t{1} << v;
      bool absorbed = std::any_of(masks.begin(), masks.end(),
                                  [m](std::uint64_t k) { return (k & m) == m; });
      if (!absorbed) {
        masks.push_back(m);
        kept.push_back(std::move(f));
      }
    }
  } else {
    for (auto& f : faces) {
      bool absorbed = std::any_of(kept.begin(), kept.end(), [&f](const Face& k) {
        return std::includes(k.begin(), k.end(), f.begin(), f.end());
      });
      if (!absorbed) kept.push_back(std::move(f));
    }
  }
  std::sort(kept.begin(), kept.end(), facet_order);
  return kept;
}

Label label_from_name(std::string_view name, Ownership mode, int line) {
  if (mode == Ownership::Impartial) return Label::None;
  if (!name.empty() && name.front() == 'x') return Label::Left;
  if (!name.empty() && name.front() == 'y') return Label::Right;
  throw ParseError(line, "vertex name '" + std::string(name) +
                             "' must start with x (Left) or y (Right)");
}

char label_char(Label l) {
  switch (l) {
    case Label::Left: return 'L';
    case Label::Right: return 'R';
    default: return 'N';
  }
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Complex Complex::from_sorted(std::vector<Vertex> vertices, std::vector<Face> faces, bool antichain) {
  Complex c;
  c.vertices_ = std::move(vertices);
  if (antichain) {
    std::sort(faces.begin(), faces.end(), facet_order);
    c.facets_ = std::move(faces);
  } else {
    c.facets_ = maximal_faces(std::move(faces), c.vertices_.size());
  }
  return c;
}

Complex Complex::normalize(const std::vector<std::vector<Vertex>>& raw_faces,
                           const std::vector<Vertex>& extra_universe) {
  std::map<std::string, Label, std::less<>> labels;
  auto add = [&labels](const Vertex& v) {
    if (v.name.empty()) throw Error("empty vertex name");
    auto [it, inserted] = labels.emplace(v.name, v.label);
    if (!inserted && it->second != v.label)
      throw Error("vertex '" + v.name + "' has conflicting owners");
  };
  for (const auto& f : raw_faces)
    for (const auto& v : f) add(v);
  for (const auto& v : extra_universe) add(v);

  std::vector<Vertex> vertices;
  vertices.reserve(labels.size());
  for (const auto& [name, label] : labels) vertices.push_back({name, label});

  auto index_of = [&vertices](const std::string& name) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), name,
                               [](const Vertex& v, const std::string& n) { return v.name < n; });
    return static_cast<VertexIndex>(it - vertices.begin());
  };

  std::vector<Face> faces;
  faces.reserve(raw_faces.size());
  for (const auto& raw : raw_faces) {
    Face f;
    f.reserve(raw.size());
    for (const auto& v : raw) f.push_back(index_of(v.name));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    faces.push_back(std::move(f));
  }
  return from_sorted(std::move(vertices), std::move(faces), false);
}

Complex Complex::from_names(const std::vector<std::vector<std::string>>& raw_faces, Ownership mode) {
  std::vector<std::vector<Vertex>> faces;
  faces.reserve(raw_faces.size());
  for (const auto& raw : raw_faces) {
    std::vector<Vertex> f;
    for (const auto& n : raw) f.push_back({n, label_from_name(n, mode, 0)});
    faces.push_back(std::move(f));
  }
  return normalize(faces);
}

Complex Complex::parse(std::string_view text, Ownership mode) {
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> universe;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front().starts_with("vertices:")) {
      if (have_header) throw ParseError(line_no, "duplicate 'vertices:' header");
      have_header = true;
      tokens.front().erase(0, std::string_view("vertices:").size());
      for (const auto& t : tokens)
        if (!t.empty()) universe.push_back({t, label_from_name(t, mode, line_no)});
    } else if (tokens.size() == 1 && tokens.front() == "()") {
      faces.emplace_back();
    } else {
      std::vector<Vertex> face;
      for (const auto& t : tokens) {
        if (t == "()") throw ParseError(line_no, "'()' must stand alone on its line");
        face.push_back({t, label_from_name(t, mode, line_no)});
      }
      faces.push_back(std::move(face));
    }
    if (end == text.size()) break;
  }
  return normalize(faces, universe);
}

std::string Complex::serialize() const {
  std::string out;
  if (support().size() != vertices_.size()) {
    out += "vertices:";
    for (const auto& v : vertices_) {
      out += ' ';
      out += v.name;
    }
    out += '\n';
  }
  for (const auto& f : facets_) {
    if (f.empty()) {
      out += "()\n";
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += vertices_[f[i]].name;
    }
    out += '\n';
  }
  return out;
}

std::string Complex::key() const {
  std::string out;
  for (const auto& v : vertices_) {
    out += label_char(v.label);
    out += v.name;
    out += ' ';
  }
  out += '|';
  for (const auto& f : facets_) {
    for (VertexIndex i : f) {
      out += std::to_string(i);
      out += ',';
    }
    out += ';';
  }
  return out;
}

std::optional<VertexIndex> Complex::find(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name,
                             [](const Vertex& v, std::string_view n) { return v.name < n; });
  if (it == vertices_.end() || it->name != name) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

int Complex::dimension() const {
  if (facets_.empty()) return -1;
  return static_cast<int>(facets_.back().size()) - 1;
}

bool Complex::is_pure() const {
  if (facets_.empty()) return true;
  return facets_.front().size() == facets_.back().size();
}

std::vector<VertexIndex> Complex::support() const {
  std::vector<char> used(vertices_.size(), 0);
  for (const auto& f : facets_)
    for (VertexIndex v : f) used[v] = 1;
  std::vector<VertexIndex> out;
  for (VertexIndex i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

bool Complex::is_impartial() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.label == Label::None; });
}

std::optional<Complex> Complex::link(VertexIndex v) const {
  if (v >= vertices_.size()) throw Error("vertex index out of range");
  std::vector<const Face*> containing;
  for (const auto& f : facets_)
    if (std::binary_search(f.begin(), f.end(), v)) containing.push_back(&f);
  if (containing.empty()) return std::nullopt;

  // F \ {v} over facets containing v is already an antichain.
  std::vector<VertexIndex> remap(vertices_.size(), 0);
  std::vector<char> used(vertices_.size(), 0);
  for (const Face* f : containing)
    for (VertexIndex u : *f)
      if (u != v) used[u] = 1;
  std::vector<Vertex> verts;
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = static_cast<VertexIndex>(verts.size());
    verts.push_back(vertices_[i]);
  }
  std::vector<Face> faces;
  faces.reserve(containing.size());
  for (const Face* f : containing) {
    Face g;
    g.reserve(f->size() - 1);
    for (VertexIndex u : *f)
      if (u != v) g.push_back(remap[u]);
    faces.push_back(std::move(g));
  }
  return from_sorted(std::move(verts), std::move(faces), true);
}

std::optional<Complex> Complex::link(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw Error("unknown vertex '" + std::string(name) + "'");
  return link(*idx);
}

Complex Complex::negate_labels() const {
  // owners follow the name prefix, so x<rest> and y<rest> trade places
  auto flip = [](Vertex v) {
    v.label = opposite(v.label);
    if (v.label == Label::Left) v.name[0] = 'x';
    if (v.label == Label::Right) v.name[0] = 'y';
    return v;
  };
  std::vector<Vertex> universe;
  for (const auto& v : vertices_) universe.push_back(flip(v));
  std::vector<std::vector<Vertex>> faces;
  for (const auto& f : facets_) {
    auto& face = faces.emplace_back();
    for (VertexIndex i : f) face.push_back(flip(vertices_[i]));
  }
  return normalize(faces, universe);
}

Complex Complex::unlabeled() const {
  Complex c = *this;
  for (auto& v : c.vertices_) v.label = Label::None;
  return c;
}

Complex Complex::renamed(std::string_view tag) const {
  std::vector<std::pair<Vertex, VertexIndex>> order;
  order.reserve(vertices_.size());
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    Vertex v = vertices_[i];
    if (v.label == Label::None)
      v.name = std::string(tag) + "_" + v.name;
    else
      v.name = v.name.substr(0, 1) + std::string(tag) + "_" + v.name.substr(1);
    order.emplace_back(std::move(v), i);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first.name < b.first.name; });
  std::vector<VertexIndex> remap(vertices_.size());
  std::vector<Vertex> verts;
  for (VertexIndex k = 0; k < order.size(); ++k) {
    remap[order[k].second] = k;
    verts.push_back(order[k].first);
  }
  for (std::size_t k = 1; k < verts.size(); ++k)
    if (verts[k].name == verts[k - 1].name) throw Error("renaming produced duplicate vertex names");
  std::vector<Face> faces;
  for (const auto& f : facets_) {
    Face g;
    for (VertexIndex u : f) g.push_back(remap[u]);
    std::sort(g.begin(), g.end());
    faces.push_back(std::move(g));
  }
  return from_sorted(std::move(verts), std::move(faces), true);
}

Complex join(const Complex& a, const Complex& b) {
  std::vector<Vertex> verts;
  std::vector<VertexIndex> ra(a.vertices_.size()), rb(b.vertices_.size());
  std::size_t i = 0, j = 0;
  while (i < a.vertices_.size() || j < b.vertices_.size()) {
    bool take_a = j == b.vertices_.size() ||
                  (i < a.vertices_.size() && a.vertices_[i].name < b.vertices_[j].name);
    if (i < a.vertices_.size() && j < b.vertices_.size() &&
        a.vertices_[i].name == b.vertices_[j].name)
      throw Error("join: vertex name '" + a.vertices_[i].name + "' occurs in both complexes");
    if (take_a) {
      ra[i] = static_cast<VertexIndex>(verts.size());
      verts.push_back(a.vertices_[i++]);
    } else {
      rb[j] = static_cast<VertexIndex>(verts.size());
      verts.push_back(b.vertices_[j++]);
    }
  }
  // <> joins like <∅>: both are the game 0.
  static const std::vector<Face> kEmptyFacet{Face{}};
  const auto& fa = a.facets_.empty() ? kEmptyFacet : a.facets_;
  const auto& fb = b.facets_.empty() ? kEmptyFacet : b.facets_;
  std::vector<Face> faces;
  faces.reserve(fa.size() * fb.size());
  for (const auto& f : fa) {
    for (const auto& g : fb) {
      Face h;
      h.reserve(f.size() + g.size());
      for (VertexIndex u : f) h.push_back(ra[u]);
      for (VertexIndex u : g) h.push_back(rb[u]);
      std::sort(h.begin(), h.end());
      faces.push_back(std::move(h));
    }
  }
  if (a.facets_.empty() && b.facets_.empty()) faces.clear();
  return Complex::from_sorted(std::move(verts), std::move(faces), true);
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Sub-complex on `group` (sorted indices of c) with the given antichain of
// faces, re-indexed locally.
Complex restrict_to(const Complex& c, const std::vector<VertexIndex>& group,
                    const std::set<Face>& faces) {
  std::vector<VertexIndex> remap(c.vertices().size(), 0);
  std::vector<Vertex> verts;
  for (VertexIndex u : group) {
    remap[u] = static_cast<VertexIndex>(verts.size());
    verts.push_back(c.vertex(u));
  }
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const auto& f : faces) {
    Face g;
    for (VertexIndex u : f) g.push_back(remap[u]);
    out.push_back(std::move(g));
  }
  return Complex::from_antichain(std::move(verts), std::move(out));
}

}  // namespace

std::vector<Complex> join_factors(const Complex& c) {
  if (c.is_terminal()) return {};
  const auto support = c.support();
  const auto facets = c.facets();
  const std::size_t n = support.size();
  const std::size_t nf = facets.size();
  const std::size_t words = (nf + 63) / 64;

  // membership[k] = bitset over facets containing support[k]
  std::vector<std::uint32_t> pos(c.vertices().size(), 0);
  for (std::size_t k = 0; k < n; ++k) pos[support[k]] = static_cast<std::uint32_t>(k);
  std::vector<std::vector<std::uint64_t>> membership(n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::int64_t> count(n, 0);
  for (std::size_t fi = 0; fi < nf; ++fi)
    for (VertexIndex u : facets[fi]) {
      membership[pos[u]][fi / 64] |= std::uint64_t{1} << (fi % 64);
      ++count[pos[u]];
    }

  const auto total = static_cast<std::int64_t>(nf);
  DisjointSets sets(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::int64_t both = 0;
      for (std::size_t w = 0; w < words; ++w)
        both += std::popcount(membership[a][w] & membership[b][w]);
      const std::int64_t ca = count[a], cb = count[b];
      const std::int64_t only_a = ca - both, only_b = cb - both;
      const std::int64_t neither = total - ca - cb + both;
      // Vertices in different join factors have independent membership.
      bool independent = both * total == ca * cb && only_a * total == ca * (total - cb) &&
                         only_b * total == (total - ca) * cb &&
                         neither * total == (total - ca) * (total - cb);
      if (!independent) sets.unite(a, b);
    }
  }

  std::map<std::size_t, std::vector<VertexIndex>> groups;
  for (std::size_t k = 0; k < n; ++k) groups[sets.find(k)].push_back(support[k]);
  if (groups.size() == 1) return {restrict_to(c, support, {facets.begin(), facets.end()})};

  std::vector<std::vector<VertexIndex>> group_list;
  for (auto& [root, g] : groups) group_list.push_back(std::move(g));
  std::vector<std::set<Face>> projections(group_list.size());
  std::vector<std::uint32_t> group_of(c.vertices().size(), 0);
  for (std::uint32_t gi = 0; gi < group_list.size(); ++gi)
    for (VertexIndex u : group_list[gi]) group_of[u] = gi;
  for (const auto& f : facets) {
    std::vector<Face> parts(group_list.size());
    for (VertexIndex u : f) parts[group_of[u]].push_back(u);
    for (std::size_t gi = 0; gi < parts.size(); ++gi) projections[gi].insert(std::move(parts[gi]));
  }
  std::int64_t product = 1;
  for (const auto& p : projections) {
    product *= static_cast<std::int64_t>(p.size());
    if (product > total) break;
  }
  if (product != total) return {restrict_to(c, support, {facets.begin(), facets.end()})};

  std::vector<Complex> out;
  for (std::size_t gi = 0; gi < group_list.size(); ++gi)
    out.push_back(restrict_to(c, group_list[gi], projections[gi]));
  return out;
}

std::vector<Complex> connected_components(const Complex& c) {
  const auto facets = c.facets();
  DisjointSets sets(facets.size());
  std::vector<std::size_t> owner(c.vertices().size(), facets.size());
  for (std::size_t fi = 0; fi < facets.size(); ++fi)
    for (VertexIndex u : facets[fi]) {
      if (owner[u] == facets.size())
        owner[u] = fi;
      else
        sets.unite(fi, owner[u]);
    }
  std::map<std::size_t, std::set<Face>> groups;
  for (std::size_t fi = 0; fi < facets.size(); ++fi) groups[sets.find(fi)].insert(facets[fi]);
  std::vector<Complex> out;
  for (const auto& [root, faces] : groups) {
    std::set<VertexIndex> verts;
    for (const auto& f : faces) verts.insert(f.begin(), f.end());
    out.push_back(restrict_to(c, {verts.begin(), verts.end()}, faces));
  }
  return out;
}

}  // namespace spg
