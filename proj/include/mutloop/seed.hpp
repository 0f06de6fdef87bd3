#pragma once

// Exchange matrices, matrix mutation, seed isomorphisms and mutation loops.
//
// Conventions:
//   * indices are 0-based in the API; file formats use 1-based indices.
//   * a Permutation acts on matrices by (s.A)_{ij} = A_{s^-1(i), s^-1(j)}.
//   * a MutationLoop (base B, path, s) satisfies s.B = B_end, where B_end is
//     the result of mutating B along the path. The closing map sends the
//     end chart back to the base chart by x_i(out) = x_{s(i)}(end).

#include "mutloop/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutloop {

/// Permutation search is exhaustive; seeds above this rank are rejected.
inline constexpr std::size_t kMaxIsomorphismRank = 12;

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMatrix b) : b_(std::move(b)) { validate(); }
  ExchangeMatrix(std::initializer_list<std::initializer_list<long long>> rows) : b_(rows) { validate(); }

  std::size_t rank() const { return b_.rows(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
  const IntMatrix& matrix() const { return b_; }

  /// Reinterpret Fomin-Zelevinsky convention data (transpose).
  ExchangeMatrix transposed() const { return ExchangeMatrix(b_.transpose()); }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }
  friend bool operator!=(const ExchangeMatrix& a, const ExchangeMatrix& b) { return !(a == b); }

 private:
  void validate() const {
    if (b_.rows() == 0) throw std::invalid_argument("exchange matrix must have rank >= 1");
    if (!b_.square()) throw std::invalid_argument("exchange matrix must be square");
    for (std::size_t i = 0; i < b_.rows(); ++i)
      for (std::size_t j = i; j < b_.cols(); ++j)
        if (b_(i, j) != -b_(j, i))
          throw std::invalid_argument("exchange matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
  }

  IntMatrix b_;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v]) throw std::invalid_argument("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), std::size_t{0});
    return Permutation(std::move(im));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (this * other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const {
    std::vector<std::size_t> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[other(i)];
    return Permutation(std::move(im));
  }

  /// s.A with (s.A)_{ij} = A_{s^-1(i), s^-1(j)}.
  IntMatrix act(const IntMatrix& a) const {
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(images_[i], images_[j]) = a(i, j);
    return out;
  }
  ExchangeMatrix act(const ExchangeMatrix& b) const { return ExchangeMatrix(act(b.matrix())); }

  /// Matrix P with (P x)_i = x_{s(i)}.
  IntMatrix closing_matrix() const {
    IntMatrix p(images_.size(), images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p(i, images_[i]) = 1;
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<std::size_t> images_;
};

using MutationPath = std::vector<std::size_t>;

inline void check_index(const ExchangeMatrix& b, std::size_t k) {
  if (k >= b.rank())
    throw std::out_of_range("mutation index " + std::to_string(k + 1) + " outside 1.." + std::to_string(b.rank()));
}

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  check_index(b, k);
  const std::size_t n = b.rank();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        out(i, j) = b(i, j) + positive_part(b(i, k)) * positive_part(b(k, j)) -
                    positive_part(-b(i, k)) * positive_part(-b(k, j));
      }
    }
  return ExchangeMatrix(std::move(out));
}

/// B^{(t_0)}, ..., B^{(t_h)} along the path.
inline std::vector<ExchangeMatrix> apply_path(const ExchangeMatrix& b, const MutationPath& path) {
  std::vector<ExchangeMatrix> seq;
  seq.reserve(path.size() + 1);
  seq.push_back(b);
  for (std::size_t k : path) seq.push_back(mutate_matrix(seq.back(), k));
  return seq;
}

/// Lexicographically smallest s with s.b1 = b2, if any.
inline std::optional<Permutation> find_seed_isomorphism(const ExchangeMatrix& b1, const ExchangeMatrix& b2,
                                                        std::size_t max_rank = kMaxIsomorphismRank) {
  const std::size_t n = b1.rank();
  if (b2.rank() != n) throw std::invalid_argument("seed isomorphism: rank mismatch");
  if (n > max_rank)
    throw std::invalid_argument("seed isomorphism: rank " + std::to_string(n) + " exceeds the brute-force cap " +
                                std::to_string(max_rank));

  // Depth-first over images in increasing order, so the first complete
  // assignment is the lexicographically smallest. s(i) = images[i] must
  // satisfy b2(s(i), s(j)) = b1(i, j).
  std::vector<std::size_t> images(n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t i) {
    const std::size_t si = images[i];
    if (b2(si, si) != b1(i, i)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (b2(si, images[j]) != b1(i, j)) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      images[i] = v;
      if (!consistent(i)) continue;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Permutation(images);
}

struct MutationLoop {
  ExchangeMatrix base;
  MutationPath path;
  Permutation closing_perm;

  std::size_t rank() const { return base.rank(); }
};

/// Matrix-level loop check: a closing permutation s with s.B = B_end.
/// This says nothing about potentials; callers report "loop (matrix level)".
inline std::optional<Permutation> is_mutation_loop(const ExchangeMatrix& b, const MutationPath& path) {
  for (std::size_t k : path) check_index(b, k);
  return find_seed_isomorphism(b, apply_path(b, path).back());
}

/// Build a loop, validating that perm actually closes the path.
inline MutationLoop make_loop(ExchangeMatrix base, MutationPath path, Permutation perm) {
  if (perm.size() != base.rank()) throw std::invalid_argument("closing permutation has wrong size");
  for (std::size_t k : path) check_index(base, k);
  const ExchangeMatrix end = apply_path(base, path).back();
  if (perm.act(base) != end) throw std::invalid_argument("permutation does not close the mutation path");
  return MutationLoop{std::move(base), std::move(path), std::move(perm)};
}

/// Loop representing the inverse map: reversed steps conjugated by the
/// closing permutation, closed by its inverse.
inline MutationLoop inverse_loop(const MutationLoop& loop) {
  const Permutation inv = loop.closing_perm.inverse();
  MutationPath path;
  path.reserve(loop.path.size());
  for (auto it = loop.path.rbegin(); it != loop.path.rend(); ++it) path.push_back(inv(*it));
  return make_loop(loop.base, std::move(path), inv);
}

/// Cyclic shift: the same loop seen from the vertex after the first step.
inline MutationLoop rotate_loop(const MutationLoop& loop) {
  if (loop.path.empty()) return loop;
  const std::size_t k0 = loop.path.front();
  MutationPath path(loop.path.begin() + 1, loop.path.end());
  path.push_back(loop.closing_perm(k0));
  return make_loop(mutate_matrix(loop.base, k0), std::move(path), loop.closing_perm);
}

/// The path of the n-th power as a plain edge path from the base vertex,
/// together with its closing permutation s^n.
inline MutationLoop power_loop(const MutationLoop& loop, std::size_t n) {
  // Mutating at k after the closing relabel equals relabelling after
  // mutating the end chart at s(k), so the r-th traversal uses s^r(k).
  MutationPath path;
  Permutation acc = Permutation::identity(loop.rank());
  for (std::size_t rep = 0; rep < n; ++rep) {
    for (std::size_t k : loop.path) path.push_back(acc(k));
    acc = acc.compose(loop.closing_perm);
  }
  return make_loop(loop.base, std::move(path), acc);
}

}  // namespace mutloop
