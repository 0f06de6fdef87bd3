#pragma once

// Characteristic polynomials, (anti-)palindromicity and spectral radii of
// integer presentation matrices.
//
// Polynomials are exact. Roots are floating point: they come from companion
// matrix eigenvalues of each square-free factor, polished by Newton steps
// against that factor, so multiplicities are exact even though the roots
// are not.

#include "mutloop/arith.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutloop {

/// Integer polynomial; coeffs run from the leading coefficient down to the
/// constant term.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
  IntPolynomial operator-() const {
    IntPolynomial p = *this;
    for (auto& c : p.coeffs) c = -c;
    return p;
  }
};

inline std::string to_string(const IntPolynomial& p, const char* var = "v") {
  std::string out;
  const std::size_t d = p.degree();
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const BigInt& c = p.coeffs[i];
    if (c == 0) continue;
    const std::size_t pow = d - i;
    const BigInt mag = abs_value(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || pow == 0) out += mag.str();
    if (pow >= 1) out += var;
    if (pow >= 2) out += "^" + std::to_string(pow);
  }
  return out.empty() ? "0" : out;
}

/// det(v I - A) by Faddeev-LeVerrier; every division is exact over Z.
inline IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<BigInt> asc(n + 1);  // asc[i] = coefficient of v^i
  asc[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += asc[n - k + 1];
    m = std::move(next);
    const BigInt tr = (a * m).trace();
    if (tr % k != 0) throw std::logic_error("char_poly: inexact division");
    asc[n - k] = -tr / k;
  }
  IntPolynomial p;
  p.coeffs.assign(asc.rbegin(), asc.rend());
  return p;
}

enum class Palindromy { palindromic, anti_palindromic, neither };

inline const char* to_string(Palindromy p) {
  switch (p) {
    case Palindromy::palindromic: return "palindromic";
    case Palindromy::anti_palindromic: return "anti-palindromic";
    default: return "neither";
  }
}

inline Palindromy palindrome_check(const IntPolynomial& p) {
  const auto& c = p.coeffs;
  const std::size_t n = c.size();
  bool pal = true;
  bool anti = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != c[n - 1 - i]) pal = false;
    if (c[i] != -c[n - 1 - i]) anti = false;
  }
  if (pal) return Palindromy::palindromic;
  if (anti) return Palindromy::anti_palindromic;
  return Palindromy::neither;
}

namespace poly {

// Rational polynomials in ascending order, trimmed (no trailing zeros).
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly from_int(const IntPolynomial& p) {
  RatPoly r(p.coeffs.rbegin(), p.coeffs.rend());
  trim(r);
  return r;
}

inline RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long long>(i)));
  trim(d);
  return d;
}

/// Quotient and remainder.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly q(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    const std::size_t shift = num.size() - den.size();
    const Rational f = num.back() / den.back();
    q[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  trim(q);
  return {q, num};
}

inline RatPoly monic(RatPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Yun's square-free factorisation: p = c * prod_i f_i^i with f_i monic and
/// square-free. Returns (f_i, i) for non-constant factors.
inline std::vector<std::pair<RatPoly, std::size_t>> squarefree_factors(const RatPoly& p) {
  std::vector<std::pair<RatPoly, std::size_t>> out;
  if (p.size() <= 1) return out;
  RatPoly a = monic(p);
  RatPoly d = derivative(a);
  RatPoly g = gcd(a, d);
  RatPoly b = divmod(a, g).first;
  RatPoly c = divmod(d, g).first;
  RatPoly db = derivative(b);
  RatPoly e = c;
  for (std::size_t i = 0; i < e.size() || i < db.size(); ++i) {
    if (i >= e.size()) e.push_back(0);
    e[i] -= i < db.size() ? db[i] : Rational(0);
  }
  trim(e);
  std::size_t mult = 1;
  while (b.size() > 1) {
    RatPoly f = gcd(b, e);
    if (f.size() > 1) out.emplace_back(f, mult);
    b = divmod(b, f).first;
    c = divmod(e, f).first;
    db = derivative(b);
    e = c;
    for (std::size_t i = 0; i < e.size() || i < db.size(); ++i) {
      if (i >= e.size()) e.push_back(0);
      e[i] -= i < db.size() ? db[i] : Rational(0);
    }
    trim(e);
    ++mult;
  }
  return out;
}

}  // namespace poly

/// True iff d divides p exactly over Q.
inline bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  return poly::divmod(poly::from_int(p), poly::from_int(d)).second.empty();
}

/// Horner evaluation in extended precision.
inline std::complex<long double> evaluate(const std::vector<long double>& asc, std::complex<long double> z) {
  std::complex<long double> acc = 0;
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline std::complex<long double> evaluate(const IntPolynomial& p, std::complex<long double> z) {
  std::vector<long double> asc;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) asc.push_back(it->convert_to<long double>());
  return evaluate(asc, z);
}

struct Root {
  std::complex<double> value;
  std::size_t multiplicity = 1;
};

/// All roots with exact multiplicities.
inline std::vector<Root> polynomial_roots(const IntPolynomial& p) {
  std::vector<Root> roots;
  for (const auto& [factor, mult] : poly::squarefree_factors(poly::from_int(p))) {
    const std::size_t d = factor.size() - 1;
    std::vector<long double> asc;
    for (const auto& c : factor) asc.push_back(c.convert_to<long double>());
    std::vector<long double> dasc;
    for (std::size_t i = 1; i < asc.size(); ++i) dasc.push_back(asc[i] * static_cast<long double>(i));

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < d; ++i)
      comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -static_cast<double>(asc[i]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    const auto ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      std::complex<long double> z(ev[i].real(), ev[i].imag());
      for (int it = 0; it < 8; ++it) {
        const auto fz = evaluate(asc, z);
        const auto dz = evaluate(dasc, z);
        if (std::abs(dz) == 0.0L) break;
        const auto step = fz / dz;
        z -= step;
        if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(z))) break;
      }
      // Real factors have conjugate-symmetric roots; snap tiny imaginary parts.
      if (std::abs(z.imag()) < 1e-14L * std::max(1.0L, std::abs(z))) z = {z.real(), 0.0L};
      roots.push_back(Root{std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag())), mult});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) > std::abs(b.value);
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return roots;
}

/// Relative gap used to decide dominance and simplicity.
inline constexpr double kDefaultSpectralTol = 1e-8;

struct SpectralSummary {
  double rho = 0;
  bool dominant_real = false;    // rho is attained by a positive real eigenvalue
  bool dominant_simple = false;  // ... which is simple and the only root of modulus rho
  std::optional<std::vector<double>> perron_ray;  // unit L1 norm, nonnegative coordinate sum
  double residual = 0;           // ||E v - rho v||_1 / ||v||_1
  IntPolynomial char_poly;
  std::vector<Root> roots;
};

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).convert_to<double>();
  return out;
}

inline SpectralSummary spectral_summary(const IntMatrix& e, double tol = kDefaultSpectralTol) {
  if (!(tol > 0)) throw std::invalid_argument("spectral_summary: tol must be positive");
  SpectralSummary s;
  s.char_poly = char_poly(e);
  s.roots = polynomial_roots(s.char_poly);
  if (s.roots.empty()) return s;
  s.rho = std::abs(s.roots.front().value);

  std::size_t dominant_count = 0;
  std::optional<Root> positive;
  for (const Root& r : s.roots) {
    if (std::abs(r.value) < s.rho * (1 - tol)) continue;
    dominant_count += r.multiplicity;
    if (std::abs(r.value.imag()) <= tol * s.rho && r.value.real() > 0) positive = r;
  }
  s.dominant_real = positive.has_value();
  s.dominant_simple = positive && dominant_count == 1;
  if (!s.dominant_simple) return s;

  const double lambda = positive->value.real();
  const Eigen::MatrixXd a = to_eigen(e);
  const auto n = a.rows();
  const Eigen::MatrixXd shifted = a - lambda * Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
  Eigen::VectorXd v = svd.matrixV().col(n - 1);
  // A few inverse-iteration sweeps with a slightly perturbed shift.
  const Eigen::MatrixXd near = a - lambda * (1 + 1e-12) * Eigen::MatrixXd::Identity(n, n);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(near);
  for (int it = 0; it < 3; ++it) {
    Eigen::VectorXd next = lu.solve(v);
    if (!next.allFinite() || next.norm() == 0) break;
    v = next / next.norm();
  }
  if (v.sum() < 0) v = -v;
  v /= v.lpNorm<1>();
  s.residual = (a * v - lambda * v).lpNorm<1>() / v.lpNorm<1>();
  s.perron_ray = std::vector<double>(v.data(), v.data() + n);
  return s;
}

}  // namespace mutloop
