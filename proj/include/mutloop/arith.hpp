#pragma once

// Exact integer / rational scalars and the small dense integer matrix type
// used throughout the library. Everything here is value-semantic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mutloop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rational>;

inline BigInt positive_part(const BigInt& a) { return a > 0 ? a : BigInt(0); }

inline int sign_of(const Rational& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
inline int sign_of(const BigInt& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline Rational abs_value(const Rational& a) { return a < 0 ? Rational(-a) : a; }

/// "p/q" or "p" (decimal, optional sign). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Smallest positive rescaling of v with integer, coprime entries.
/// The zero vector is returned unchanged.
inline RatVector primitive_integer_ray(const RatVector& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt lcm_den = 1;
  for (const auto& c : v) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(c)));
  BigInt g = 0;
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  for (const auto& c : v) {
    BigInt k = numerator(c) * (lcm_den / denominator(c));
    g = boost::multiprecision::gcd(g, abs_value(k));
    ints.push_back(std::move(k));
  }
  if (g == 0) return v;
  RatVector out;
  out.reserve(v.size());
  for (auto& k : ints) out.emplace_back(k / g);
  return out;
}

inline Rational l1_norm(const RatVector& v) {
  Rational s = 0;
  for (const auto& c : v) s += abs_value(c);
  return s;
}

/// Natural log of a positive exact rational, safe for values far outside
/// the double range.
inline double log_of(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  auto log_int = [](const BigInt& a) {
    // log(a) = log(mantissa) + shift*log(2) with the top 60 bits kept.
    const auto bits = boost::multiprecision::msb(a) + 1;
    if (bits <= 60) return std::log(a.convert_to<double>());
    const auto shift = bits - 60;
    BigInt top = a >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
  };
  if (r <= 0) throw std::domain_error("log of non-positive rational");
  return log_int(numerator(r)) - log_int(denominator(r));
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator-() const {
    IntMatrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend RatVector operator*(const IntMatrix& a, const RatVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RatVector y(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0) y[i] += Rational(a(i, j)) * x[j];
    return y;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  /// Entrywise L1 norm.
  BigInt l1_norm() const {
    BigInt s = 0;
    for (const auto& v : data_) s += abs_value(v);
    return s;
  }

  BigInt trace() const {
    BigInt s = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  const std::vector<BigInt>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact integer determinant (Bareiss fraction-free elimination).
inline BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline IntMatrix matrix_power(const IntMatrix& m, std::size_t n) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace mutloop
