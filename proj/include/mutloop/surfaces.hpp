#pragma once

// Ideal triangulations of punctured closed surfaces, their exchange matrices,
// flips, and a small catalog of mapping classes written as mutation loops.
//
// Triangles list their three edge labels in counterclockwise order. Signed
// adjacency: a triangle (e1,e2,e3) adds +1 to b(e1,e2), b(e2,e3), b(e3,e1)
// and -1 to the transposed entries. This reproduces the Markov matrix on the
// once-punctured torus. Self-folded triangles are not supported.

#include "mutloop/arith.hpp"
#include "mutloop/seed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mutloop {

using Triangle = std::array<std::size_t, 3>;  // 0-based edge labels, ccw

struct IdealTriangulation {
  int genus = 0;
  int punctures = 0;
  std::vector<Triangle> triangles;

  std::size_t edge_count() const { return triangles.size() * 3 / 2; }

  /// Rotate each triangle to start at its smallest label, then sort.
  IdealTriangulation canonical() const {
    IdealTriangulation out = *this;
    for (auto& t : out.triangles) {
      auto it = std::min_element(t.begin(), t.end());
      std::rotate(t.begin(), it, t.end());
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    return out;
  }

  friend bool operator==(const IdealTriangulation& a, const IdealTriangulation& b) {
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    return ca.genus == cb.genus && ca.punctures == cb.punctures && ca.triangles == cb.triangles;
  }
};

inline bool is_self_folded(const Triangle& t) { return t[0] == t[1] || t[1] == t[2] || t[0] == t[2]; }

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Number of punctures implied by the gluing. Corner c of triangle t is the
/// start of its c-th edge; two slots of one edge are glued with reversed
/// direction, so start and end swap across the edge.
inline std::size_t count_vertices(const IdealTriangulation& tri) {
  const std::size_t f = tri.triangles.size();
  const std::size_t n = tri.edge_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> slots(n);
  for (std::size_t t = 0; t < f; ++t)
    for (std::size_t c = 0; c < 3; ++c) slots.at(tri.triangles[t][c]).emplace_back(t, c);
  detail::UnionFind uf(3 * f);
  auto corner = [](std::size_t t, std::size_t c) { return 3 * t + c; };
  for (const auto& s : slots) {
    const auto [t1, c1] = s[0];
    const auto [t2, c2] = s[1];
    uf.unite(corner(t1, c1), corner(t2, (c2 + 1) % 3));
    uf.unite(corner(t1, (c1 + 1) % 3), corner(t2, c2));
  }
  std::size_t v = 0;
  for (std::size_t i = 0; i < 3 * f; ++i)
    if (uf.find(i) == i) ++v;
  return v;
}

inline void validate(const IdealTriangulation& tri) {
  if (tri.genus < 0 || tri.punctures < 1) throw std::invalid_argument("triangulation: need genus >= 0 and punctures >= 1");
  const long long expected = 6LL * tri.genus - 6 + 3LL * tri.punctures;
  if (expected < 1) throw std::invalid_argument("triangulation: surface admits no ideal triangulation");
  if (tri.triangles.size() * 3 != static_cast<std::size_t>(2 * expected))
    throw std::invalid_argument("triangulation: triangle count does not match genus and punctures");
  std::vector<int> uses(static_cast<std::size_t>(expected), 0);
  for (const auto& t : tri.triangles)
    for (std::size_t e : t) {
      if (e >= uses.size()) throw std::invalid_argument("triangulation: edge label out of range");
      ++uses[e];
    }
  for (std::size_t e = 0; e < uses.size(); ++e)
    if (uses[e] != 2)
      throw std::invalid_argument("triangulation: edge " + std::to_string(e + 1) + " appears " +
                                  std::to_string(uses[e]) + " times, expected 2");
  if (count_vertices(tri) != static_cast<std::size_t>(tri.punctures))
    throw std::invalid_argument("triangulation: gluing gives " + std::to_string(count_vertices(tri)) +
                                " punctures, declared " + std::to_string(tri.punctures));
}

inline ExchangeMatrix triangulation_to_matrix(const IdealTriangulation& tri) {
  validate(tri);
  for (const auto& t : tri.triangles)
    if (is_self_folded(t)) throw std::invalid_argument("triangulation: self-folded triangles are not supported");
  const std::size_t n = tri.edge_count();
  IntMatrix b(n, n);
  for (const auto& t : tri.triangles)
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t i = t[c];
      const std::size_t j = t[(c + 1) % 3];
      b(i, j) += 1;
      b(j, i) -= 1;
    }
  return ExchangeMatrix(std::move(b));
}

/// Flip edge k: triangles (k,a,b) and (k,c,d) become (b,c,k) and (d,a,k).
inline IdealTriangulation flip(const IdealTriangulation& tri, std::size_t k) {
  if (k >= tri.edge_count()) throw std::out_of_range("flip: edge " + std::to_string(k + 1) + " out of range");
  std::vector<std::size_t> owners;
  for (std::size_t t = 0; t < tri.triangles.size(); ++t)
    for (std::size_t e : tri.triangles[t])
      if (e == k) owners.push_back(t);
  if (owners.size() != 2) throw std::invalid_argument("flip: edge does not bound two triangle slots");
  if (owners[0] == owners[1])
    throw std::invalid_argument("flip: edge " + std::to_string(k + 1) + " lies in a self-folded triangle");
  auto starting_at_k = [k](Triangle t) {
    while (t[0] != k) std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
  };
  const Triangle t1 = starting_at_k(tri.triangles[owners[0]]);
  const Triangle t2 = starting_at_k(tri.triangles[owners[1]]);
  IdealTriangulation out = tri;
  out.triangles[owners[0]] = {t1[2], t2[1], k};
  out.triangles[owners[1]] = {t2[2], t1[1], k};
  return out;
}

inline IdealTriangulation relabel(const IdealTriangulation& tri, const Permutation& s) {
  IdealTriangulation out = tri;
  for (auto& t : out.triangles)
    for (auto& e : t) e = s(e);
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

/// Once-punctured torus: edges 1,2,3 of slopes 1/0, 0/1, 1/1.
inline IdealTriangulation torus_triangulation() { return IdealTriangulation{1, 1, {{0, 1, 2}, {0, 1, 2}}}; }

/// Four-punctured sphere as the tetrahedron ABCD with edges
/// 1=AB 2=AC 3=AD 4=BC 5=BD 6=CD.
inline IdealTriangulation sphere4_triangulation() {
  return IdealTriangulation{0, 4, {{1, 3, 0}, {0, 4, 2}, {2, 5, 1}, {3, 5, 4}}};
}

struct SurfaceMappingClassSpec {
  std::string name;
  std::string surface;  // "torus" or "sphere4"
  MutationPath flip_word;
  Permutation relabel;
  std::string description;
  std::optional<double> expected_stretch;  // closed form, when known
  std::string expected_stretch_formula;
};

inline std::vector<std::string> builtin_mapping_class_names() {
  return {"torus-LR", "torus-RL", "torus-LLR", "torus-L", "torus-R"};
}

inline IdealTriangulation builtin_triangulation(const std::string& surface) {
  if (surface == "torus") return torus_triangulation();
  if (surface == "sphere4") return sphere4_triangulation();
  throw std::invalid_argument("unknown surface '" + surface + "'");
}

// Flip words and relabellings below are frozen output of tools/find_flip_word.
inline std::pair<IdealTriangulation, SurfaceMappingClassSpec> builtin_mapping_class(const std::string& name) {
  auto make = [](std::string n, MutationPath word, std::vector<std::size_t> perm, std::string desc,
                 std::optional<double> lambda, std::string formula) {
    return SurfaceMappingClassSpec{std::move(n), "torus", std::move(word), Permutation(std::move(perm)),
                                   std::move(desc), lambda, std::move(formula)};
  };
  const double golden_sq = (3 + std::sqrt(5.0)) / 2;
  SurfaceMappingClassSpec spec;
  if (name == "torus-LR")
    spec = make(name, {2, 1}, {1, 2, 0}, "pseudo-Anosov, action [[1,1],[1,2]]", golden_sq,
                "largest root of x^2 - 3x + 1");
  else if (name == "torus-RL")
    spec = make(name, {2, 0}, {2, 0, 1}, "pseudo-Anosov, action [[2,1],[1,1]]", golden_sq,
                "largest root of x^2 - 3x + 1");
  else if (name == "torus-LLR")
    spec = make(name, {2, 1, 0}, {0, 2, 1}, "pseudo-Anosov, action [[1,1],[2,3]]",
                2 + std::sqrt(3.0), "largest root of x^2 - 4x + 1");
  else if (name == "torus-L")
    spec = make(name, {2}, {2, 1, 0}, "Dehn twist, action [[1,0],[1,1]]", 1.0,
                "parabolic, trace 2");
  else if (name == "torus-R")
    spec = make(name, {2}, {0, 2, 1}, "Dehn twist, action [[1,1],[0,1]]", 1.0,
                "parabolic, trace 2");
  else
    throw std::invalid_argument("unknown mapping class '" + name + "'");
  return {builtin_triangulation(spec.surface), spec};
}

inline MutationLoop mapping_class_loop(const std::string& name) {
  auto [tri, spec] = builtin_mapping_class(name);
  return make_loop(triangulation_to_matrix(tri), spec.flip_word, spec.relabel);
}

}  // namespace mutloop
