#pragma once

// Spectral symmetry check: for a loop and a strict sign at some point, the
// characteristic polynomials of E and Ě = (E^T)^-1 should agree up to an
// overall sign. Equivalently P_E is palindromic or anti-palindromic. This is
// open in general, so it is tested here and never assumed elsewhere.

#include "mutloop/arith.hpp"
#include "mutloop/rng.hpp"
#include "mutloop/seed.hpp"
#include "mutloop/spectra.hpp"
#include "mutloop/stability.hpp"
#include "mutloop/surfaces.hpp"
#include "mutloop/tropical.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutloop {

struct MatrixPairCheck {
  IntMatrix e;
  IntMatrix e_check;
  IntPolynomial p_e;
  IntPolynomial p_e_check;
  Palindromy palindromy = Palindromy::neither;
  bool polys_match = false;  // p_e = +-p_e_check
  double rho = 0;
  double rho_check = 0;
  double rho_gap = 0;
};

inline MatrixPairCheck check_matrix_pair(IntMatrix e, IntMatrix e_check) {
  MatrixPairCheck c;
  c.e = std::move(e);
  c.e_check = std::move(e_check);
  c.p_e = char_poly(c.e);
  c.p_e_check = char_poly(c.e_check);
  c.palindromy = palindrome_check(c.p_e);
  c.polys_match = c.p_e.coeffs == c.p_e_check.coeffs || c.p_e.coeffs == (-c.p_e_check).coeffs;
  c.rho = spectral_summary(c.e).rho;
  c.rho_check = spectral_summary(c.e_check).rho;
  c.rho_gap = std::abs(c.rho - c.rho_check);
  return c;
}

struct ConjectureReport {
  std::string sign_source;  // "tropical", "stable" or "point"
  SignWord sign;
  MatrixPairCheck presentation;  // P.E and P.Ě, the matrices of the loop map
  /// E and Ě without the closing relabelling. Diagnostic only: once the
  /// relabelling is nontrivial this product is not the matrix of any map
  /// on one chart, and its polynomial need not be palindromic.
  MatrixPairCheck path;
  double tol = 1e-9;

  static bool holds(const MatrixPairCheck& c, double tol) {
    return c.polys_match && c.palindromy != Palindromy::neither && c.rho_gap <= tol;
  }
  bool counterexample() const { return !holds(presentation, tol); }
};

inline ConjectureReport conjecture_check(const MutationLoop& loop, const SignWord& eps, std::string source,
                                         double tol = 1e-9) {
  if (!is_strict(eps)) throw std::invalid_argument("conjecture_check: sign at the source is not strict");
  ConjectureReport r;
  r.sign_source = std::move(source);
  r.sign = eps;
  r.tol = tol;
  r.presentation = check_matrix_pair(loop_matrix(loop, eps), loop_matrix_check(loop, eps));
  r.path = check_matrix_pair(path_matrix_E(loop.base, loop.path, eps), path_matrix_E_check(loop.base, loop.path, eps));
  return r;
}

inline ConjectureReport conjecture_check_tropical(const MutationLoop& loop, double tol = 1e-9) {
  return conjecture_check(loop, tropical_sign(loop.base, loop.path).word, "tropical", tol);
}

inline ConjectureReport conjecture_check_at(const MutationLoop& loop, const TropicalPoint& w, double tol = 1e-9) {
  return conjecture_check(loop, transport_point(loop, w).second, "point", tol);
}

inline ConjectureReport conjecture_check_stable(const MutationLoop& loop, const Budget& budget = {},
                                                double tol = 1e-9) {
  const StabilityReport s = detect_sign_stability(loop, Region::cone_c_plus, budget);
  if (!s.verified()) throw std::invalid_argument("conjecture_check: no verified stable sign");
  return conjecture_check(loop, s.stable_sign, "stable", tol);
}

// ---------------------------------------------------------------------------
// Randomized harness

struct HarnessConfig {
  std::size_t count = 200;
  std::size_t max_rank = 5;
  std::uint64_t rng_seed = 0;
  double tol = 1e-9;
};

struct HarnessCase {
  std::size_t index = 0;
  std::string family;
  MutationLoop loop;
  std::optional<TropicalPoint> point;  // set when the sign came from a sampled point
  ConjectureReport report;
};

struct HarnessResult {
  std::vector<HarnessCase> cases;
  std::optional<HarnessCase> counterexample;  // the run stops at the first one
};

namespace detail {

inline MutationPath random_path(Rng& rng, std::size_t rank, std::size_t max_len) {
  MutationPath p;
  const auto len = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_len)));
  while (p.size() < len) {
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rank) - 1));
    if (p.empty() || p.back() != k) p.push_back(k);
  }
  return p;
}

/// A path that closes on the given seed: try random words, then fall back to
/// a word followed by its reverse, which always closes with the identity.
inline MutationLoop closing_random_path(Rng& rng, const ExchangeMatrix& b, std::size_t max_len) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MutationPath p = random_path(rng, b.rank(), max_len);
    if (auto s = is_mutation_loop(b, p)) return make_loop(b, std::move(p), *s);
  }
  MutationPath p = random_path(rng, b.rank(), max_len / 2 + 1);
  MutationPath back(p.rbegin(), p.rend());
  p.insert(p.end(), back.begin(), back.end());
  return make_loop(b, std::move(p), Permutation::identity(b.rank()));
}

/// Random acyclic seed with b_ij >= 0 for i < j; mutating at 1..N in order
/// always returns it, so the word is a loop (a Coxeter transformation).
inline MutationLoop random_coxeter_loop(Rng& rng, std::size_t rank) {
  IntMatrix m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      m(i, j) = rng.uniform(0, 2);
      m(j, i) = -m(i, j);
    }
  const ExchangeMatrix b(std::move(m));
  MutationPath word(rank);
  for (std::size_t i = 0; i < rank; ++i) word[i] = i;
  MutationPath p;
  const auto reps = rng.uniform(1, 2);
  for (std::int64_t r = 0; r < reps; ++r) p.insert(p.end(), word.begin(), word.end());
  if (auto s = is_mutation_loop(b, p)) return make_loop(b, std::move(p), *s);
  MutationPath rev(p.rbegin(), p.rend());
  return make_loop(b, rev, *is_mutation_loop(b, rev));
}

inline std::size_t random_rank(Rng& rng, std::size_t max_rank) {
  return static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(max_rank)));
}

inline std::pair<std::string, MutationLoop> random_loop(Rng& rng, std::size_t index, std::size_t max_rank) {
  std::string family;
  MutationLoop loop;
  switch (index % 4) {
    case 0: {
      const auto b12 = rng.uniform(1, 4);
      family = "rank2";
      loop = closing_random_path(rng, ExchangeMatrix{{0, b12}, {-b12, 0}}, 8);
      break;
    }
    case 1:
      family = "torus";
      loop = closing_random_path(rng, triangulation_to_matrix(torus_triangulation()), 8);
      break;
    case 2: {
      if (max_rank >= 6) {
        family = "sphere4";
        loop = closing_random_path(rng, triangulation_to_matrix(sphere4_triangulation()), 8);
        break;
      }
      // Coxeter loop conjugated by a short path, based at a generic seed.
      family = "conjugated-acyclic";
      const MutationLoop cox = random_coxeter_loop(rng, random_rank(rng, max_rank));
      const MutationPath g = random_path(rng, cox.rank(), 3);
      MutationPath p(g.rbegin(), g.rend());
      p.insert(p.end(), cox.path.begin(), cox.path.end());
      p.insert(p.end(), g.begin(), g.end());
      const ExchangeMatrix base = apply_path(cox.base, g).back();
      loop = make_loop(base, p, *is_mutation_loop(base, p));
      break;
    }
    default:
      family = "acyclic";
      loop = random_coxeter_loop(rng, random_rank(rng, max_rank));
      break;
  }
  if (loop.rank() > max_rank) {
    family = "rank2";
    loop = closing_random_path(rng, ExchangeMatrix{{0, 2}, {-2, 0}}, 8);
  }
  // Vary the base vertex along the loop.
  const auto shifts = rng.uniform(0, static_cast<std::int64_t>(loop.path.size()) - 1);
  for (std::int64_t r = 0; r < shifts; ++r) loop = rotate_loop(loop);
  return {family, loop};
}

inline TropicalPoint random_point(Rng& rng, std::size_t n) {
  TropicalPoint w(n);
  for (auto& c : w) c = Rational(rng.uniform(-9, 9), rng.uniform(1, 5));
  return w;
}

}  // namespace detail

inline HarnessResult run_conjecture_harness(const HarnessConfig& cfg) {
  if (cfg.max_rank < 2) throw std::invalid_argument("conjecture harness: max_rank must be >= 2");
  Rng rng(cfg.rng_seed);
  HarnessResult res;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    HarnessCase c;
    c.index = i;
    std::tie(c.family, c.loop) = detail::random_loop(rng, i, cfg.max_rank);
    const auto trop = tropical_sign(c.loop.base, c.loop.path);
    if (i % 2 == 0 && is_strict(trop.word)) {
      c.report = conjecture_check(c.loop, trop.word, "tropical", cfg.tol);
    } else {
      TropicalPoint w;
      SignWord eps;
      do {
        w = detail::random_point(rng, c.loop.rank());
        eps = transport_point(c.loop, w).second;
      } while (!is_strict(eps));
      c.point = w;
      c.report = conjecture_check(c.loop, eps, "point", cfg.tol);
    }
    res.cases.push_back(c);
    if (c.report.counterexample()) {
      res.counterexample = std::move(c);
      break;
    }
  }
  return res;
}

}  // namespace mutloop
