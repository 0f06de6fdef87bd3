#pragma once

// Exact rational linear programming: dense two-phase tableau simplex with
// Bland's anti-cycling rule. Meant for the small systems that show up in
// sign-cone containment, not for general LP work.

#include "mutloop/arith.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mutloop {

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational value = 0;
  RatVector x;
};

namespace detail {

class Tableau {
 public:
  // rows: constraint rows [coeffs..., rhs]; basis[r] = basic column of row r.
  std::vector<RatVector> rows;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;  // number of variable columns

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Minimise cost.x over the current feasible basis, restricted to columns
  // allowed[j]. Returns false when unbounded.
  bool optimise(const RatVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Bland: smallest-index column with negative reduced cost.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols && !enter; ++j) {
        if (!allowed[j]) continue;
        Rational rc = cost[j];
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (rows[r][j] != 0) rc -= cost[basis[r]] * rows[r][j];
        if (rc < 0) enter = j;
      }
      if (!enter) return true;
      const std::size_t c = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][c] <= 0) continue;
        Rational ratio = rows[r][ncols] / rows[r][c];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

  RatVector solution(std::size_t nvars) const {
    RatVector x(nvars, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (basis[r] < nvars) x[basis[r]] = rows[r][ncols];
    return x;
  }
};

}  // namespace detail

/// min c.x subject to A x = b, x >= 0.
inline LpResult solve_standard_lp(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("lp: row size mismatch");

  detail::Tableau t;
  t.ncols = n + m;
  t.rows.assign(m, RatVector(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[r][j] = flip ? Rational(-a[r][j]) : a[r][j];
    t.rows[r][n + r] = 1;
    t.rows[r][n + m] = flip ? Rational(-b[r]) : b[r];
    t.basis[r] = n + r;
  }

  // Phase I: minimise the sum of artificials.
  RatVector phase1(n + m, Rational(0));
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
  std::vector<bool> all(n + m, true);
  t.optimise(phase1, all);
  Rational infeas = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (t.basis[r] >= n) infeas += t.rows[r][n + m];
  if (infeas > 0) return LpResult{LpResult::Status::infeasible, 0, {}};

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (t.rows[r][j] != 0) col = j;
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  RatVector cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  std::vector<bool> real(n + m, false);
  for (std::size_t j = 0; j < n; ++j) real[j] = true;
  if (!t.optimise(cost, real)) return LpResult{LpResult::Status::unbounded, 0, {}};

  LpResult res;
  res.status = LpResult::Status::optimal;
  res.x = t.solution(n);
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

/// min c.x subject to G x >= 0 and -bound <= x_i <= bound. Always feasible
/// (x = 0), so the result is optimal.
inline LpResult minimize_over_box(const std::vector<RatVector>& g, const RatVector& c, const Rational& bound = 1) {
  const std::size_t n = c.size();
  // x = y - bound with 0 <= y <= 2 bound. Variables: y (n), surplus s (rows),
  // slack u (n).
  //   G y - s = G (bound 1)
  //   y + u = 2 bound
  const std::size_t m1 = g.size();
  const std::size_t nv = n + m1 + n;
  std::vector<RatVector> a;
  RatVector b;
  a.reserve(m1 + n);
  for (std::size_t r = 0; r < m1; ++r) {
    if (g[r].size() != n) throw std::invalid_argument("lp: constraint row has wrong length");
    RatVector row(nv, Rational(0));
    Rational rhs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = g[r][j];
      rhs += g[r][j] * bound;
    }
    row[n + r] = -1;
    a.push_back(std::move(row));
    b.push_back(rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RatVector row(nv, Rational(0));
    row[j] = 1;
    row[n + m1 + j] = 1;
    a.push_back(std::move(row));
    b.push_back(2 * bound);
  }
  RatVector cost(nv, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  LpResult r = solve_standard_lp(a, b, cost);
  if (r.status != LpResult::Status::optimal) throw std::logic_error("box LP unexpectedly not optimal");
  RatVector x(n);
  Rational value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = r.x[j] - bound;
    value += c[j] * x[j];
  }
  return LpResult{LpResult::Status::optimal, value, std::move(x)};
}

}  // namespace mutloop
