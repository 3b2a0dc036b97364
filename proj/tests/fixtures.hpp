#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/cech.hpp"
#include "twistlab/cover.hpp"
#include "twistlab/dd.hpp"
#include "twistlab/sampling.hpp"

namespace fixture {

using namespace twistlab;

// 6-vertex real projective plane; the Moore space is its suspension with cone points N, S.
inline const std::vector<std::array<int, 3>>& rp2_triangles() {
  static const std::vector<std::array<int, 3>> t{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                 {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
  return t;
}

inline std::vector<std::string> moore_vertices() { return {"v0", "v1", "v2", "v3", "v4", "v5", "N", "S"}; }

inline std::vector<std::vector<int>> moore_tetrahedra() {
  std::vector<std::vector<int>> out;
  for (const auto& t : rp2_triangles()) {
    out.push_back({t[0], t[1], t[2], 6});
    out.push_back({t[0], t[1], t[2], 7});
  }
  return out;
}

inline std::shared_ptr<const Nerve> moore_complex() {
  const auto names = moore_vertices();
  std::vector<std::vector<std::string>> maximal;
  for (const auto& t : moore_tetrahedra()) {
    std::vector<std::string> s;
    for (int v : t) s.push_back(names[static_cast<std::size_t>(v)]);
    maximal.push_back(s);
  }
  return std::make_shared<const Nerve>(load_complex(names, maximal));
}

/// The cover of the 20 tetrahedra by the stars of the 8 vertices; its nerve is the Moore complex.
inline Cover moore_star_cover() {
  const auto tets = moore_tetrahedra();
  std::vector<std::string> ids;
  for (const auto& t : tets) ids.push_back("t" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]) + std::to_string(t[3]));
  std::vector<std::vector<int>> sets(8);
  for (std::size_t f = 0; f < tets.size(); ++f)
    for (int v : tets[f]) sets[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  return Cover(FinSpace(ids), moore_vertices(), sets);
}

/// The 15 edges (a, b), a < b < 6, of the projective plane in lexicographic order.
inline std::vector<std::pair<int, int>> rp2_edges() {
  std::vector<std::pair<int, int>> e;
  for (const auto& t : rp2_triangles())
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}})
      if (std::find(e.begin(), e.end(), std::pair{a, b}) == e.end()) e.emplace_back(a, b);
  std::sort(e.begin(), e.end());
  return e;
}

/// A Z/2 1-cocycle of the projective plane that is not a coboundary, by exhaustive search,
/// as values on rp2_edges().
inline std::vector<int> rp2_nontrivial_cocycle() {
  const auto edges = rp2_edges();
  auto value = [&](unsigned mask, int a, int b) {
    const auto k = std::find(edges.begin(), edges.end(), std::pair{a, b}) - edges.begin();
    return static_cast<int>((mask >> k) & 1U);
  };
  for (unsigned mask = 1; mask < (1U << edges.size()); ++mask) {
    bool cocycle = true;
    for (const auto& t : rp2_triangles())
      cocycle = cocycle && ((value(mask, t[0], t[1]) + value(mask, t[0], t[2]) + value(mask, t[1], t[2])) % 2 == 0);
    if (!cocycle) continue;
    bool coboundary = false;
    for (unsigned f = 0; f < 64 && !coboundary; ++f) {
      bool same = true;
      for (auto [a, b] : edges) same = same && (static_cast<int>(((f >> a) ^ (f >> b)) & 1U) == value(mask, a, b));
      coboundary = same;
    }
    if (coboundary) continue;
    std::vector<int> w;
    for (auto [a, b] : edges) w.push_back(value(mask, a, b));
    return w;
  }
  throw std::runtime_error("no nontrivial cocycle found");
}

/// c(a, b, N) = w(a, b) on the suspension, zero elsewhere: a generator of H^2(M; Z/2).
/// Works on any nerve whose vertices 0..7 are those of the Moore complex.
inline CechCochain moore_generator(std::shared_ptr<const Nerve> nerve) {
  const auto edges = rp2_edges();
  const auto w = rp2_nontrivial_cocycle();
  const auto& tris = nerve->simplices(2);
  std::vector<std::int64_t> values(tris.size(), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto idx = nerve->index_of(Simplex{edges[k].first, edges[k].second, 6});
    values[static_cast<std::size_t>(*idx)] = w[k];
  }
  return from_simplicial(nerve, FinAbGroup::cyclic(2), 2, {values});
}

/// {U1 = {a, b}, U2 = {b}}.
inline Cover two_set_cover() { return Cover(FinSpace({"a", "b"}), {"U1", "U2"}, {{0, 1}, {1}}); }

inline std::shared_ptr<const Nerve> nerve_of(const Cover& c) { return std::make_shared<const Nerve>(build_nerve(c)); }

/// A finite covering psi : Y -> X with lifts V_j, and the cover W of X.
struct Covering {
  std::vector<int> psi;
  std::shared_ptr<const Cover> base;
  std::vector<std::vector<int>> lifts;
};

/// X = the k-faces of a simplex-like complex given by its top faces; W_v = faces containing v;
/// Y = X x {0..sheets-1} with the face's r-th vertex lifting to sheet r.
inline Covering star_covering(const std::vector<std::vector<int>>& faces, int num_vertices,
                              const std::vector<std::string>& labels) {
  Covering out;
  std::vector<std::string> ids;
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(num_vertices));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    ids.push_back("f" + std::to_string(f));
    for (int v : faces[f]) sets[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  }
  out.base = std::make_shared<const Cover>(FinSpace(ids), labels, sets);
  const std::size_t sheets = faces.front().size();
  out.lifts.assign(static_cast<std::size_t>(num_vertices), {});
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t r = 0; r < sheets; ++r) {
      const int y = static_cast<int>(f * sheets + r);
      out.psi.push_back(static_cast<int>(f));
      out.lifts[static_cast<std::size_t>(faces[f][r])].push_back(y);
    }
  return out;
}

/// 2-fold: edges of a triangle covered by vertex stars (nerve = boundary of a triangle).
inline Covering two_fold() { return star_covering({{0, 1}, {0, 2}, {1, 2}}, 3, {"a", "b", "c"}); }

/// 3-fold: faces of a tetrahedron boundary covered by vertex stars (nerve = 2-sphere).
inline Covering three_fold() {
  return star_covering({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4, {"a", "b", "c", "d"});
}

/// 4-fold: the Moore complex's tetrahedra covered by vertex stars.
inline Covering four_fold_moore() { return star_covering(moore_tetrahedra(), 8, moore_vertices()); }

}  // namespace fixture
