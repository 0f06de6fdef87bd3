#pragma once

// Sign stability of mutation loops, checked on sampled rays.
//
// Sign stability quantifies over every nonzero point of a region, which no
// finite computation can cover. detect_sign_stability iterates the exact
// piecewise-linear loop map on a deterministic set of rational rays and
// reports "verified-on-samples" only when every ray settles on one common
// strict sign word. Two things are proven rather than sampled:
//   * a ray whose orbit returns to a positive multiple of an earlier point
//     is exactly periodic, so its sign words are known forever;
//   * cone stabilization C_{gamma^n} = C_{gamma^{n+1}} (exact LP), which
//     gives North dynamics on rational points.

#include "mutloop/arith.hpp"
#include "mutloop/cone.hpp"
#include "mutloop/rng.hpp"
#include "mutloop/seed.hpp"
#include "mutloop/spectra.hpp"
#include "mutloop/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mutloop {

// ---------------------------------------------------------------------------
// Tropical sign

struct TropicalSignResult {
  SignWord word;
  /// Point actually used when the all-ones point hit a zero coordinate.
  std::optional<TropicalPoint> perturbed_point;
};

/// Sign of the path on the interior of C+, evaluated at (1,...,1).
inline TropicalSignResult tropical_sign(const ExchangeMatrix& b, const MutationPath& path) {
  if (path.empty()) throw std::invalid_argument("tropical_sign: empty path");
  const std::size_t n = b.rank();
  TropicalSignResult res;
  res.word = transport_along_path(b, path, all_ones(n)).second;
  if (is_strict(res.word)) return res;
  // The sign is constant on int C+, so a zero at (1,..,1) can only come from a
  // degenerate evaluation; move along (1, 1/2, ..., 1/n) until strict.
  for (long long scale = 7; scale < (1LL << 40); scale *= 7) {
    TropicalPoint w = all_ones(n);
    for (std::size_t i = 0; i < n; ++i) w[i] += Rational(1, scale * static_cast<long long>(i + 1));
    auto word = transport_along_path(b, path, w).second;
    if (is_strict(word)) {
      res.word = std::move(word);
      res.perturbed_point = std::move(w);
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Sign cones

inline RatVector row_as_rational(const IntMatrix& a, std::size_t r, int scale) {
  RatVector v(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) v[j] = Rational(scale * a(r, j));
  return v;
}

/// C^eps_gamma for a plain path: at step nu the condition eps_nu x_{k_nu} >= 0
/// in the current chart, pulled back through the earlier linear pieces.
inline PolyhedralCone sign_cone(const ExchangeMatrix& b, const MutationPath& path, const SignWord& eps) {
  if (eps.size() != path.size()) throw std::invalid_argument("sign_cone: sign word length differs from path length");
  if (!is_strict(eps)) throw std::invalid_argument("sign_cone: sign word must be strict");
  PolyhedralCone cone{b.rank(), {}};
  IntMatrix acc = IntMatrix::identity(b.rank());
  ExchangeMatrix cur = b;
  for (std::size_t nu = 0; nu < path.size(); ++nu) {
    cone.rows.push_back(row_as_rational(acc, path[nu], static_cast<int>(eps[nu])));
    acc = elementary_E(cur, path[nu], eps[nu]) * acc;
    cur = mutate_matrix(cur, path[nu]);
  }
  return canonical(cone);
}

/// Incremental builder for C^{eps^n}_{gamma^n}, n = 1, 2, ...
class LoopConeBuilder {
 public:
  LoopConeBuilder(const MutationLoop& loop, SignWord eps)
      : loop_(loop), eps_(std::move(eps)), acc_(IntMatrix::identity(loop.rank())), cone_{loop.rank(), {}} {
    if (eps_.size() != loop.path.size()) throw std::invalid_argument("sign_cone: sign word length differs from path");
    if (!is_strict(eps_)) throw std::invalid_argument("sign_cone: sign word must be strict");
  }

  /// Add one more traversal with the given sign word (defaults to the fixed one).
  const PolyhedralCone& extend(const SignWord* eps = nullptr) {
    const SignWord& word = eps ? *eps : eps_;
    if (word.size() != loop_.path.size() || !is_strict(word))
      throw std::invalid_argument("sign_cone: bad sign word for traversal");
    ExchangeMatrix cur = loop_.base;
    for (std::size_t nu = 0; nu < loop_.path.size(); ++nu) {
      const std::size_t k = loop_.path[nu];
      cone_.rows.push_back(row_as_rational(acc_, k, static_cast<int>(word[nu])));
      acc_ = elementary_E(cur, k, word[nu]) * acc_;
      cur = mutate_matrix(cur, k);
    }
    acc_ = loop_.closing_perm.closing_matrix() * acc_;
    cone_ = canonical(cone_);
    ++power_;
    return cone_;
  }

  std::size_t power() const { return power_; }
  const PolyhedralCone& cone() const { return cone_; }

 private:
  const MutationLoop& loop_;
  SignWord eps_;
  IntMatrix acc_;
  PolyhedralCone cone_;
  std::size_t power_ = 0;
};

/// C^{eps}_{gamma^n} for a loop; eps has length n*h (the concatenated word).
inline PolyhedralCone sign_cone(const MutationLoop& loop, const SignWord& eps, std::size_t power) {
  const std::size_t h = loop.path.size();
  if (power == 0) throw std::invalid_argument("sign_cone: power must be >= 1");
  if (eps.size() != power * h) throw std::invalid_argument("sign_cone: sign word must have length power*h");
  if (h == 0) return PolyhedralCone{loop.rank(), {}};
  LoopConeBuilder builder(loop, SignWord(eps.begin(), eps.begin() + static_cast<std::ptrdiff_t>(h)));
  for (std::size_t r = 0; r < power; ++r) {
    SignWord part(eps.begin() + static_cast<std::ptrdiff_t>(r * h),
                  eps.begin() + static_cast<std::ptrdiff_t>((r + 1) * h));
    builder.extend(&part);
  }
  return builder.cone();
}

struct ConeStabilization {
  std::size_t n = 0;  // smallest n with C_{gamma^n} = C_{gamma^{n+1}}
  PolyhedralCone cone;  // that cone, redundant rows removed
};

/// Once C_n = C_{n+1} all later cones agree (C_{m+1} is determined by C_m
/// through the same linear piece), so C_n is the stable cone.
inline std::optional<ConeStabilization> check_cone_stabilization(const MutationLoop& loop, const SignWord& stable_sign,
                                                                 std::size_t n_max) {
  if (loop.path.empty()) return std::nullopt;
  LoopConeBuilder builder(loop, stable_sign);
  PolyhedralCone prev = builder.extend();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const PolyhedralCone& next = builder.extend();
    // next ⊆ prev always; equality needs prev ⊆ next.
    if (cone_contains(next, prev).contained) return ConeStabilization{n, remove_redundant_rows(prev)};
    prev = next;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sampling and stability detection

enum class Region { cone_c_plus, interior_c_plus, nonneg_and_nonpos, integer_rays };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::cone_c_plus: return "cone-C-plus";
    case Region::interior_c_plus: return "interior-C-plus";
    case Region::nonneg_and_nonpos: return "nonneg-and-nonpos";
    default: return "integer-rays";
  }
}

inline Region parse_region(const std::string& s) {
  if (s == "cone-C-plus") return Region::cone_c_plus;
  if (s == "interior-C-plus") return Region::interior_c_plus;
  if (s == "nonneg-and-nonpos") return Region::nonneg_and_nonpos;
  if (s == "integer-rays") return Region::integer_rays;
  throw std::invalid_argument("unknown region '" + s + "'");
}

struct Budget {
  std::size_t max_iterations = 200;
  std::size_t ray_samples = 64;
  std::uint64_t rng_seed = 0;
};

/// Deterministic sample rays. Structural rays (coordinate rays, the all-ones
/// point and their mirrors, as the region requires) always come first and are
/// kept even if they exceed ray_samples.
inline std::vector<TropicalPoint> sample_rays(std::size_t n, Region region, const Budget& budget) {
  std::vector<TropicalPoint> rays;
  auto unit = [n](std::size_t i, int s) {
    TropicalPoint v(n, Rational(0));
    v[i] = s;
    return v;
  };
  auto negate = [](TropicalPoint v) {
    for (auto& c : v) c = -c;
    return v;
  };
  const bool with_units = region != Region::interior_c_plus;
  const bool mirrored = region == Region::nonneg_and_nonpos || region == Region::integer_rays;
  if (with_units)
    for (std::size_t i = 0; i < n; ++i) rays.push_back(unit(i, 1));
  if (with_units && mirrored)
    for (std::size_t i = 0; i < n; ++i) rays.push_back(unit(i, -1));
  rays.push_back(all_ones(n));
  if (mirrored) rays.push_back(negate(all_ones(n)));

  Rng rng(budget.rng_seed);
  while (rays.size() < budget.ray_samples) {
    TropicalPoint v(n);
    if (region == Region::integer_rays) {
      bool nonzero = false;
      for (auto& c : v) {
        c = Rational(rng.uniform(-9, 9));
        nonzero = nonzero || c != 0;
      }
      if (!nonzero) continue;
      rays.push_back(primitive_integer_ray(v));
    } else {
      for (auto& c : v) c = Rational(rng.uniform(1, 1000), rng.uniform(1, 97));
      if (mirrored && rays.size() + 1 < budget.ray_samples) rays.push_back(negate(v));
      rays.push_back(std::move(v));
    }
  }
  return rays;
}

enum class RayStatus {
  settled,           // constant strict sign on the final stretch of the budget
  periodic_stable,   // exactly periodic orbit with one constant strict sign
  periodic_unstable, // exactly periodic orbit whose signs never settle on a strict word
  unsettled          // none of the above within the budget
};

inline const char* to_string(RayStatus s) {
  switch (s) {
    case RayStatus::settled: return "settled";
    case RayStatus::periodic_stable: return "periodic-stable";
    case RayStatus::periodic_unstable: return "periodic-unstable";
    default: return "unsettled";
  }
}

struct RayDiagnostics {
  TropicalPoint start;
  RayStatus status = RayStatus::unsettled;
  SignWord final_sign;
  std::size_t stabilized_at = 0;  // first iterate from which the sign is final_sign
  std::size_t iterations = 0;
  bool saw_zero = false;
  /// Run-length encoded sign words: (word, how many consecutive iterates).
  std::vector<std::pair<SignWord, std::size_t>> trace;
};

enum class Verdict { verified_on_samples, failed, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified_on_samples: return "verified-on-samples";
    case Verdict::failed: return "failed";
    default: return "inconclusive";
  }
}

struct StabilityReport {
  Region region = Region::cone_c_plus;
  Budget budget;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  SignWord stable_sign;
  std::size_t stabilization_bound = 0;
  std::optional<IntMatrix> stable_matrix_E;
  std::optional<IntMatrix> stable_matrix_E_check;
  std::optional<SpectralSummary> spectrum;        // of E
  std::optional<SpectralSummary> spectrum_check;  // of Ě
  double lambda = std::nan("");
  double lambda_check = std::nan("");
  std::vector<RayDiagnostics> rays;

  bool verified() const { return verdict == Verdict::verified_on_samples; }
};

/// Minimum length of the constant final stretch for a non-periodic ray.
inline std::size_t settle_window(const Budget& b) { return std::max<std::size_t>(2, b.max_iterations / 4); }

inline RayDiagnostics iterate_ray(const MutationLoop& loop, const TropicalPoint& start, const Budget& budget) {
  RayDiagnostics d;
  d.start = start;
  std::vector<SignWord> words;
  std::map<TropicalPoint, std::size_t> seen;
  TropicalPoint w = primitive_integer_ray(start);
  seen.emplace(w, 0);
  std::optional<std::size_t> cycle_start;
  for (std::size_t it = 0; it < budget.max_iterations; ++it) {
    auto [next, word] = transport_point(loop, w);
    if (!is_strict(word)) d.saw_zero = true;
    words.push_back(std::move(word));
    w = primitive_integer_ray(next);
    auto [pos, inserted] = seen.emplace(w, it + 1);
    if (!inserted) {
      cycle_start = pos->second;
      break;
    }
  }
  d.iterations = words.size();
  for (const auto& word : words) {
    if (!d.trace.empty() && d.trace.back().first == word) ++d.trace.back().second;
    else d.trace.emplace_back(word, 1);
  }
  if (words.empty()) return d;

  if (cycle_start) {
    // phi^{iterations}(w) is a positive multiple of phi^{cycle_start}(w):
    // words repeat with that period forever.
    const SignWord& first = words[*cycle_start];
    const bool constant =
        std::all_of(words.begin() + static_cast<std::ptrdiff_t>(*cycle_start), words.end(),
                    [&](const SignWord& x) { return x == first; });
    if (constant && is_strict(first)) {
      d.status = RayStatus::periodic_stable;
      d.final_sign = first;
      std::size_t s = *cycle_start;
      while (s > 0 && words[s - 1] == first) --s;
      d.stabilized_at = s;
    } else {
      d.status = RayStatus::periodic_unstable;
      d.final_sign = words.back();
    }
    return d;
  }

  d.final_sign = words.back();
  std::size_t s = words.size() - 1;
  while (s > 0 && words[s - 1] == d.final_sign) --s;
  d.stabilized_at = s;
  if (is_strict(d.final_sign) && words.size() - s >= settle_window(budget)) d.status = RayStatus::settled;
  return d;
}

inline void attach_spectra(StabilityReport& r, const MutationLoop& loop) {
  r.stable_matrix_E = loop_matrix(loop, r.stable_sign);
  r.stable_matrix_E_check = loop_matrix_check(loop, r.stable_sign);
  r.spectrum = spectral_summary(*r.stable_matrix_E);
  r.spectrum_check = spectral_summary(*r.stable_matrix_E_check);
  r.lambda = r.spectrum->rho;
  r.lambda_check = r.spectrum_check->rho;
}

inline StabilityReport detect_sign_stability(const MutationLoop& loop, Region region = Region::cone_c_plus,
                                             const Budget& budget = {}) {
  if (budget.max_iterations == 0 || budget.ray_samples == 0)
    throw std::invalid_argument("detect_sign_stability: budgets must be positive");
  StabilityReport r;
  r.region = region;
  r.budget = budget;
  if (loop.path.empty()) {
    r.verdict = Verdict::failed;
    r.reason = "empty path has no strict sign";
    return r;
  }
  for (const auto& ray : sample_rays(loop.rank(), region, budget)) r.rays.push_back(iterate_ray(loop, ray, budget));

  std::optional<SignWord> common;
  bool all_done = true;
  bool disagree = false;
  bool proven_disagree = false;
  std::optional<SignWord> proven;
  for (std::size_t i = 0; i < r.rays.size(); ++i) {
    const auto& d = r.rays[i];
    if (d.status == RayStatus::periodic_unstable) {
      r.verdict = Verdict::failed;
      r.reason = "ray " + std::to_string(i) + " has an exactly periodic orbit whose sign never settles on a strict word";
      return r;
    }
    if (d.status == RayStatus::unsettled) {
      all_done = false;
      continue;
    }
    if (d.status == RayStatus::periodic_stable) {
      if (proven && *proven != d.final_sign) proven_disagree = true;
      proven = d.final_sign;
    }
    if (!common) common = d.final_sign;
    else if (*common != d.final_sign) disagree = true;
    r.stabilization_bound = std::max(r.stabilization_bound, d.stabilized_at);
  }
  if (proven_disagree) {
    r.verdict = Verdict::failed;
    r.reason = "two exactly periodic rays keep different strict signs forever";
    return r;
  }
  if (!all_done) {
    r.verdict = Verdict::inconclusive;
    r.reason = "some rays did not settle within the iteration budget";
    return r;
  }
  if (disagree) {
    r.verdict = Verdict::inconclusive;
    r.reason = "sampled rays settled on different sign words";
    return r;
  }
  r.verdict = Verdict::verified_on_samples;
  r.stable_sign = *common;
  r.reason = "all sampled rays settled on the same strict sign";
  attach_spectra(r, loop);
  return r;
}

// ---------------------------------------------------------------------------
// X-filling

struct XFillingResult {
  bool filling_to_depth = true;          // no zero coordinate found
  std::optional<MutationPath> witness;   // path to a chart with a zero coordinate
  std::size_t charts_checked = 0;
};

/// Semi-decision: walk every non-backtracking path of length <= depth.
inline XFillingResult check_x_filling(const TropicalPoint& w, const ExchangeMatrix& b, std::size_t depth) {
  if (w.size() != b.rank()) throw std::invalid_argument("check_x_filling: point has wrong length");
  XFillingResult res;
  MutationPath path;
  auto visit = [&](auto&& self, const ExchangeMatrix& cur, const TropicalPoint& x) -> bool {
    ++res.charts_checked;
    for (const auto& c : x)
      if (c == 0) {
        res.filling_to_depth = false;
        res.witness = path;
        return true;
      }
    if (path.size() == depth) return false;
    for (std::size_t k = 0; k < cur.rank(); ++k) {
      if (!path.empty() && path.back() == k) continue;
      path.push_back(k);
      auto next = mutate_point(cur, k, x).first;
      if (self(self, mutate_matrix(cur, k), next)) return true;
      path.pop_back();
    }
    return false;
  };
  visit(visit, b, w);
  return res;
}

// ---------------------------------------------------------------------------
// Perron rays against cones, North-South dynamics, uniform probing

/// Largest violation of the cone inequalities, each scaled by 1/||row||_1.
/// Nonpositive means inside.
inline double cone_violation(const PolyhedralCone& cone, const std::vector<double>& v) {
  double worst = -std::numeric_limits<double>::infinity();
  if (cone.rows.empty()) return 0;
  for (const auto& a : cone.rows) {
    double dot = 0;
    double norm = 0;
    for (std::size_t j = 0; j < cone.dim; ++j) {
      const double aj = to_double(a[j]);
      dot += aj * v[j];
      norm += std::abs(aj);
    }
    worst = std::max(worst, -dot / norm);
  }
  return worst;
}

/// Orient a Perron ray (sign is arbitrary) so it best fits the cone.
inline std::vector<double> orient_into(const PolyhedralCone& cone, std::vector<double> v) {
  std::vector<double> neg = v;
  for (auto& x : neg) x = -x;
  return cone_violation(cone, neg) < cone_violation(cone, v) ? neg : v;
}

/// Rational approximation of a float ray (denominator 10^12).
inline TropicalPoint rationalize(const std::vector<double>& v) {
  TropicalPoint out;
  const double scale = 1e12;
  for (double x : v) out.emplace_back(static_cast<long long>(std::llround(x * scale)), 1000000000000LL);
  return out;
}

struct NorthSouthReport {
  StabilityReport forward;
  StabilityReport backward;
  bool north_south_on_samples = false;
  bool non_parabolic = false;
  std::optional<std::vector<double>> attracting_ray;
  std::optional<std::vector<double>> repelling_ray;
  SignWord sign_at_attracting;
  SignWord sign_at_repelling;
  std::optional<XFillingResult> attracting_filling;
  std::optional<XFillingResult> repelling_filling;
  double lambda_forward = std::nan("");
  double lambda_backward = std::nan("");
  /// rho(E^{-1}) = 1 / (smallest root modulus of the forward stable matrix).
  double lambda_forward_inverse = std::nan("");
  Palindromy forward_palindromy = Palindromy::neither;
  bool reciprocal_consistent = false;  // lambda_backward matches rho(E^{-1})
  std::string summary;
};

inline NorthSouthReport check_north_south(const MutationLoop& loop, const Budget& budget = {},
                                          Region region = Region::integer_rays, std::size_t filling_depth = 3) {
  NorthSouthReport ns;
  const MutationLoop inv = inverse_loop(loop);
  ns.forward = detect_sign_stability(loop, region, budget);
  ns.backward = detect_sign_stability(inv, region, budget);
  if (!ns.forward.verified() || !ns.backward.verified()) {
    ns.summary = "sign stability not verified in both directions";
    return ns;
  }
  ns.lambda_forward = ns.forward.lambda;
  ns.lambda_backward = ns.backward.lambda;
  ns.forward_palindromy = palindrome_check(ns.forward.spectrum->char_poly);
  if (!ns.forward.spectrum->roots.empty()) {
    ns.lambda_forward_inverse = 1.0 / std::abs(ns.forward.spectrum->roots.back().value);
    ns.reciprocal_consistent = std::abs(ns.lambda_forward_inverse - ns.lambda_backward) <= 1e-6 * ns.lambda_backward;
  }
  const auto& sf = *ns.forward.spectrum;
  const auto& sb = *ns.backward.spectrum;
  const double tol = 1e-8;
  if (!(sf.perron_ray && sb.perron_ray && ns.lambda_forward > 1 + tol && ns.lambda_backward > 1 + tol)) {
    ns.summary = "no contraction: stretch factor is 1 or the dominant eigenvalue is not simple";
    return ns;
  }
  ns.attracting_ray = orient_into(sign_cone(loop.base, loop.path, ns.forward.stable_sign), *sf.perron_ray);
  ns.repelling_ray = orient_into(sign_cone(inv.base, inv.path, ns.backward.stable_sign), *sb.perron_ray);
  ns.sign_at_attracting = transport_point(loop, rationalize(*ns.attracting_ray)).second;
  ns.sign_at_repelling = transport_point(loop, rationalize(*ns.repelling_ray)).second;
  ns.non_parabolic = ns.sign_at_attracting != ns.sign_at_repelling;
  ns.attracting_filling = check_x_filling(rationalize(*ns.attracting_ray), loop.base, filling_depth);
  ns.repelling_filling = check_x_filling(rationalize(*ns.repelling_ray), loop.base, filling_depth);
  ns.north_south_on_samples = true;
  ns.summary = std::string("north-south dynamics on samples, ") + (ns.non_parabolic ? "non-parabolic" : "parabolic");
  return ns;
}

struct UniformProbe {
  std::vector<StabilityReport> rotations;  // rotation r starts after r steps
  bool all_verified = false;
  std::string scope;
};

/// Probe uniform sign stability on integer rays for the loop word and all of
/// its cyclic shifts. Other representation paths are not enumerated.
inline UniformProbe probe_uniform_sign_stability(const MutationLoop& loop, const Budget& budget = {}) {
  UniformProbe p;
  MutationLoop cur = loop;
  p.all_verified = true;
  for (std::size_t r = 0; r < std::max<std::size_t>(1, loop.path.size()); ++r) {
    p.rotations.push_back(detect_sign_stability(cur, Region::integer_rays, budget));
    p.all_verified = p.all_verified && p.rotations.back().verified();
    cur = rotate_loop(cur);
  }
  p.scope = "one representation path and its " + std::to_string(loop.path.size()) + " cyclic shifts";
  return p;
}

// ---------------------------------------------------------------------------
// Invariant-cone criterion cross-check

struct ConeCriterionCheck {
  bool applicable = false;       // stable cone found, pointed and full-dimensional
  bool maps_into_interior = false;  // E^n (cone) ⊆ int cone for some n <= n_max
  std::size_t power = 0;
  bool simple_dominant_inside = false;  // simple dominant eigenvalue, eigenvector in int cone
  bool agree = false;
  std::vector<RatVector> extreme_rays;
};

inline ConeCriterionCheck cone_criterion_check(const PolyhedralCone& stable_cone, const IntMatrix& e,
                                               const SpectralSummary& spec, std::size_t n_max = 20,
                                               double tol = 1e-8) {
  ConeCriterionCheck c;
  if (!is_full_dimensional(stable_cone)) return c;
  c.extreme_rays = extreme_rays(stable_cone);
  // Pointed iff the rows span R^N; a rank deficit leaves a nonzero lineality space.
  if (c.extreme_rays.size() < stable_cone.dim) return c;
  {
    std::vector<RatVector> rows = stable_cone.rows;
    if (detail::nullspace(rows, stable_cone.dim).size() != 0) return c;
  }
  c.applicable = true;
  IntMatrix power = e;
  for (std::size_t n = 1; n <= n_max && !c.maps_into_interior; ++n) {
    bool inside = true;
    for (const auto& ray : c.extreme_rays)
      if (!stable_cone.contains_in_interior(power * ray)) inside = false;
    if (inside) {
      c.maps_into_interior = true;
      c.power = n;
    }
    power = power * e;
  }
  if (spec.dominant_simple && spec.perron_ray) {
    auto v = orient_into(stable_cone, *spec.perron_ray);
    c.simple_dominant_inside = cone_violation(stable_cone, v) < -tol;
  }
  c.agree = c.maps_into_interior == c.simple_dominant_inside;
  return c;
}

}  // namespace mutloop
