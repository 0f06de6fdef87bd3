#pragma once

// Rational polyhedral cones given by half-space systems {x : a.x >= 0}.

#include "mutloop/arith.hpp"
#include "mutloop/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mutloop {

struct PolyhedralCone {
  std::size_t dim = 0;
  std::vector<RatVector> rows;

  bool contains(const RatVector& x) const {
    for (const auto& a : rows) {
      Rational s = 0;
      for (std::size_t j = 0; j < dim; ++j) s += a[j] * x[j];
      if (s < 0) return false;
    }
    return true;
  }

  bool contains_in_interior(const RatVector& x) const {
    for (const auto& a : rows) {
      Rational s = 0;
      for (std::size_t j = 0; j < dim; ++j) s += a[j] * x[j];
      if (s <= 0) return false;
    }
    return true;
  }

  friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b) {
    return a.dim == b.dim && a.rows == b.rows;
  }
};

/// Rows scaled to primitive integer vectors, zero rows dropped, duplicates
/// removed and sorted. Equal systems compare equal after this.
inline PolyhedralCone canonical(const PolyhedralCone& c) {
  PolyhedralCone out{c.dim, {}};
  for (const auto& r : c.rows) {
    if (r.size() != c.dim) throw std::invalid_argument("cone row has wrong length");
    bool zero = std::all_of(r.begin(), r.end(), [](const Rational& v) { return v == 0; });
    if (!zero) out.rows.push_back(primitive_integer_ray(r));
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

struct ContainmentResult {
  bool contained = true;
  std::optional<RatVector> witness;  // point of `other` outside `cone`
};

/// Decide other ⊆ cone: minimise each row of cone over other ∩ [-1,1]^N.
inline ContainmentResult cone_contains(const PolyhedralCone& cone, const PolyhedralCone& other) {
  if (cone.dim != other.dim) throw std::invalid_argument("cone_contains: dimension mismatch");
  for (const auto& a : cone.rows) {
    LpResult r = minimize_over_box(other.rows, a);
    if (r.value < 0) return ContainmentResult{false, std::move(r.x)};
  }
  return {};
}

inline bool cone_equal(const PolyhedralCone& a, const PolyhedralCone& b) {
  return cone_contains(a, b).contained && cone_contains(b, a).contained;
}

/// Drop rows implied by the others. Result is canonical.
inline PolyhedralCone remove_redundant_rows(const PolyhedralCone& c) {
  PolyhedralCone cur = canonical(c);
  for (std::size_t i = 0; i < cur.rows.size();) {
    PolyhedralCone rest{cur.dim, {}};
    for (std::size_t j = 0; j < cur.rows.size(); ++j)
      if (j != i) rest.rows.push_back(cur.rows[j]);
    if (minimize_over_box(rest.rows, cur.rows[i]).value >= 0) {
      cur = std::move(rest);
    } else {
      ++i;
    }
  }
  return cur;
}

/// True iff the cone has nonempty interior.
inline bool is_full_dimensional(const PolyhedralCone& c) {
  // maximise t subject to a.x - t >= 0, box on (x, t).
  std::vector<RatVector> g;
  for (const auto& a : c.rows) {
    RatVector row = a;
    row.push_back(Rational(-1));
    g.push_back(std::move(row));
  }
  RatVector cost(c.dim + 1, Rational(0));
  cost[c.dim] = -1;
  return minimize_over_box(g, cost).value < 0;
}

namespace detail {

/// Nullspace basis of a rational matrix (rows x n) by Gauss-Jordan.
inline std::vector<RatVector> nullspace(std::vector<RatVector> m, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational piv = m[r][c];
    for (auto& v : m[r]) v /= piv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RatVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Extreme rays of a pointed cone, as primitive integer vectors, by brute
/// force over (N-1)-subsets of rows. Throws when the subset count exceeds
/// max_subsets.
inline std::vector<RatVector> extreme_rays(const PolyhedralCone& c, std::size_t max_subsets = 200000) {
  const PolyhedralCone cone = remove_redundant_rows(c);
  const std::size_t n = cone.dim;
  const std::size_t m = cone.rows.size();
  std::vector<RatVector> rays;
  auto consider = [&](const RatVector& v) {
    for (const RatVector& cand : {v, [&] {
           RatVector neg = v;
           for (auto& x : neg) x = -x;
           return neg;
         }()}) {
      if (cone.contains(cand)) {
        RatVector p = primitive_integer_ray(cand);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(std::move(p));
      }
    }
  };
  if (n == 0) return rays;
  const std::size_t k = n - 1;
  if (k > m) return rays;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::size_t visited = 0;
  for (;;) {
    if (++visited > max_subsets) throw std::runtime_error("extreme_rays: too many row subsets");
    std::vector<RatVector> sub;
    for (std::size_t i : idx) sub.push_back(cone.rows[i]);
    auto ns = detail::nullspace(sub, n);
    if (ns.size() == 1) consider(ns.front());
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

}  // namespace mutloop
