#pragma once

// Tropical cluster X-points, the signed piecewise-linear mutation maps and
// the presentation matrices of their linear pieces.

#include "mutloop/arith.hpp"
#include "mutloop/seed.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mutloop {

enum class Sign : int { minus = -1, zero = 0, plus = 1 };
using SignWord = std::vector<Sign>;
using TropicalPoint = RatVector;

inline Sign sgn(const Rational& a) { return static_cast<Sign>(sign_of(a)); }

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : (s == Sign::minus ? '-' : '0'); }

inline std::string to_string(const SignWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Sign e : w) s.push_back(sign_char(e));
  return s;
}

inline SignWord parse_sign_word(const std::string& text) {
  SignWord w;
  for (char c : text) {
    if (c == '+') w.push_back(Sign::plus);
    else if (c == '-') w.push_back(Sign::minus);
    else if (c == '0') w.push_back(Sign::zero);
    else if (c == ',' || c == ' ') continue;
    else throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
  return w;
}

inline bool is_strict(const SignWord& w) {
  for (Sign s : w)
    if (s == Sign::zero) return false;
  return true;
}

inline void require_strict(Sign eps) {
  if (eps == Sign::zero) throw std::invalid_argument("presentation matrices need a strict sign");
}

/// E_{k,eps}: identity except -1 at (k,k) and [eps b_ik]_+ down column k.
inline IntMatrix elementary_E(const ExchangeMatrix& b, std::size_t k, Sign eps) {
  check_index(b, k);
  require_strict(eps);
  const int e = static_cast<int>(eps);
  IntMatrix m = IntMatrix::identity(b.rank());
  m(k, k) = -1;
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (i != k) m(i, k) = positive_part(e * b(i, k));
  return m;
}

/// Ě_{k,eps} = (E_{k,eps}^T)^{-1}: -1 at (k,k) and [-eps b_kj]_+ along row k.
inline IntMatrix elementary_E_check(const ExchangeMatrix& b, std::size_t k, Sign eps) {
  check_index(b, k);
  require_strict(eps);
  const int e = static_cast<int>(eps);
  IntMatrix m = IntMatrix::identity(b.rank());
  m(k, k) = -1;
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (j != k) m(k, j) = positive_part(-e * b(k, j));
  return m;
}

/// One tropical X-mutation: x'_k = -x_k, x'_i = x_i + [sgn(x_k) b_ik]_+ x_k.
/// Total at x_k = 0, where the returned sign is zero and w is fixed.
inline std::pair<TropicalPoint, Sign> mutate_point(const ExchangeMatrix& b, std::size_t k, const TropicalPoint& w) {
  check_index(b, k);
  if (w.size() != b.rank()) throw std::invalid_argument("tropical point has wrong length");
  const Sign s = sgn(w[k]);
  TropicalPoint out = w;
  out[k] = -w[k];
  if (s != Sign::zero) {
    const int e = static_cast<int>(s);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != k) {
        const BigInt c = positive_part(e * b(i, k));
        if (c != 0) out[i] += Rational(c) * w[k];
      }
  }
  return {std::move(out), s};
}

/// Point in the end chart of the path, plus the sign word along it.
inline std::pair<TropicalPoint, SignWord> transport_along_path(const ExchangeMatrix& b, const MutationPath& path,
                                                               TropicalPoint w) {
  SignWord word;
  word.reserve(path.size());
  ExchangeMatrix cur = b;
  for (std::size_t k : path) {
    auto [next, s] = mutate_point(cur, k, w);
    word.push_back(s);
    w = std::move(next);
    cur = mutate_matrix(cur, k);
  }
  return {std::move(w), std::move(word)};
}

/// Relabel a point of the end chart into the base chart: x_i(out) = x_{s(i)}.
inline TropicalPoint close_chart(const Permutation& perm, const TropicalPoint& w) {
  TropicalPoint out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[perm(i)];
  return out;
}

/// phi(w) in the base chart together with eps_gamma(w).
inline std::pair<TropicalPoint, SignWord> transport_point(const MutationLoop& loop, const TropicalPoint& w) {
  if (w.size() != loop.rank()) throw std::invalid_argument("tropical point has wrong length");
  auto [mid, word] = transport_along_path(loop.base, loop.path, w);
  return {close_chart(loop.closing_perm, mid), std::move(word)};
}

/// E_{k_{h-1},eps_{h-1}} ... E_{k_0,eps_0}, each factor built in its own chart.
inline IntMatrix path_matrix_E(const ExchangeMatrix& b, const MutationPath& path, const SignWord& eps) {
  if (eps.size() != path.size()) throw std::invalid_argument("sign word length differs from path length");
  IntMatrix acc = IntMatrix::identity(b.rank());
  ExchangeMatrix cur = b;
  for (std::size_t nu = 0; nu < path.size(); ++nu) {
    acc = elementary_E(cur, path[nu], eps[nu]) * acc;
    cur = mutate_matrix(cur, path[nu]);
  }
  return acc;
}

inline IntMatrix path_matrix_E_check(const ExchangeMatrix& b, const MutationPath& path, const SignWord& eps) {
  if (eps.size() != path.size()) throw std::invalid_argument("sign word length differs from path length");
  IntMatrix acc = IntMatrix::identity(b.rank());
  ExchangeMatrix cur = b;
  for (std::size_t nu = 0; nu < path.size(); ++nu) {
    acc = elementary_E_check(cur, path[nu], eps[nu]) * acc;
    cur = mutate_matrix(cur, path[nu]);
  }
  return acc;
}

/// P . E_{gamma,eps}: the linear piece of the loop map on the sign cone of eps.
inline IntMatrix path_presentation_matrix(const ExchangeMatrix& b, const MutationPath& path, const SignWord& eps,
                                          const Permutation& perm) {
  return perm.closing_matrix() * path_matrix_E(b, path, eps);
}

/// ((P . E_{gamma,eps})^T)^{-1}, assembled from the dual elementary factors.
/// P is a permutation matrix, so (P^T)^{-1} = P.
inline IntMatrix path_presentation_matrix_check(const ExchangeMatrix& b, const MutationPath& path,
                                                const SignWord& eps, const Permutation& perm) {
  return perm.closing_matrix() * path_matrix_E_check(b, path, eps);
}

inline IntMatrix loop_matrix(const MutationLoop& loop, const SignWord& eps) {
  return path_presentation_matrix(loop.base, loop.path, eps, loop.closing_perm);
}
inline IntMatrix loop_matrix_check(const MutationLoop& loop, const SignWord& eps) {
  return path_presentation_matrix_check(loop.base, loop.path, eps, loop.closing_perm);
}

inline TropicalPoint all_ones(std::size_t n) { return TropicalPoint(n, Rational(1)); }

}  // namespace mutloop
