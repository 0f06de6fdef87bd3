#pragma once

// Entropy estimates through their K-theoretic reduction: the categorical
// entropies of the autoequivalence induced by a sign-stable loop equal
// log λ̌ (finite-dimensional side) and log λ (perfect side, at T = 0), and
// both are limits of (1/n) log ||E^n||_1. Categories are not modelled.

#include "mutloop/arith.hpp"
#include "mutloop/seed.hpp"
#include "mutloop/stability.hpp"
#include "mutloop/tropical.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mutloop {

struct TracePoint {
  std::size_t n = 0;
  double value = 0;
};
using GrowthTrace = std::vector<TracePoint>;

inline void require_verified(const StabilityReport& r, const char* who) {
  if (!r.verified()) throw std::invalid_argument(std::string(who) + ": stability report is not verified-on-samples");
}

/// log λ̌. T is accepted for symmetry with the categorical statement and
/// ignored: the finite-dimensional entropy does not depend on it.
inline double entropy_dfd(const StabilityReport& r, double /*T*/ = 0) {
  require_verified(r, "entropy_dfd");
  return std::log(r.lambda_check);
}

/// log λ, the perfect-side entropy at T = 0.
inline double entropy_per(const StabilityReport& r) {
  require_verified(r, "entropy_per");
  return std::log(r.lambda);
}

/// For T != 0 only the inequality h_T <= log λ is known; this is that bound.
inline double entropy_per_upper_bound(const StabilityReport& r, double /*T*/) { return entropy_per(r); }

/// (1/n) log ||E^n||_1 for n = 1..n_max, with exact powers.
inline GrowthTrace norm_growth_trace(const IntMatrix& e, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("norm_growth_trace: n_max must be >= 1");
  if (e.rows() != e.cols()) throw std::invalid_argument("norm_growth_trace: matrix must be square");
  GrowthTrace out;
  IntMatrix p = e;
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back({n, log_of(Rational(p.l1_norm())) / static_cast<double>(n)});
    if (n < n_max) p = p * e;
  }
  return out;
}

/// (1/n) log ||x(phi^n(w))||_1 for n = 1..n_max.
inline GrowthTrace orbit_growth_trace(const MutationLoop& loop, const TropicalPoint& w, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("orbit_growth_trace: n_max must be >= 1");
  if (w.size() != loop.rank()) throw std::invalid_argument("orbit_growth_trace: point has wrong length");
  if (l1_norm(w) == 0) throw std::invalid_argument("orbit_growth_trace: w must be nonzero");
  GrowthTrace out;
  TropicalPoint x = w;
  for (std::size_t n = 1; n <= n_max; ++n) {
    x = transport_point(loop, x).first;
    out.push_back({n, log_of(l1_norm(x)) / static_cast<double>(n)});
  }
  return out;
}

/// Two-point slope of n * value over the last quarter of the trace, which
/// cancels the constant term in log ||E^n|| ~ n log ρ + c.
inline double extrapolate(const GrowthTrace& t) {
  if (t.empty()) throw std::invalid_argument("extrapolate: empty trace");
  if (t.size() < 4) return t.back().value;
  const TracePoint& a = t[(3 * t.size()) / 4 - 1];
  const TracePoint& b = t.back();
  return (b.value * static_cast<double>(b.n) - a.value * static_cast<double>(a.n)) / static_cast<double>(b.n - a.n);
}

/// phi^n(w) / ||phi^n(w)||_1 in floating point.
inline std::vector<double> normalized_orbit(const MutationLoop& loop, const TropicalPoint& w, std::size_t n) {
  TropicalPoint x = w;
  for (std::size_t i = 0; i < n; ++i) x = primitive_integer_ray(transport_point(loop, x).first);
  const Rational norm = l1_norm(x);
  if (norm == 0) throw std::invalid_argument("normalized_orbit: w must be nonzero");
  std::vector<double> out;
  for (const auto& c : x) out.push_back(to_double(c / norm));
  return out;
}

struct EntropyEstimate {
  double h_dfd = 0;
  double h_per = 0;
  double T = 0;
  GrowthTrace growth_trace;        // of the stable matrix E
  GrowthTrace growth_trace_check;  // of Ě
  GrowthTrace orbit_trace;         // at (1,...,1)
  double extrapolated = 0;         // from growth_trace
};

inline EntropyEstimate estimate_entropy(const StabilityReport& r, const MutationLoop& loop, double T = 0,
                                        std::size_t n_max = 40) {
  require_verified(r, "estimate_entropy");
  EntropyEstimate e;
  e.T = T;
  e.h_dfd = entropy_dfd(r, T);
  e.h_per = entropy_per(r);
  e.growth_trace = norm_growth_trace(*r.stable_matrix_E, n_max);
  e.growth_trace_check = norm_growth_trace(*r.stable_matrix_E_check, n_max);
  e.orbit_trace = orbit_growth_trace(loop, all_ones(loop.rank()), n_max);
  e.extrapolated = extrapolate(e.growth_trace);
  return e;
}

}  // namespace mutloop
