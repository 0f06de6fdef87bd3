// Search flip words on the once-punctured torus that realise a given
// SL(2,Z) action, using the slope model of the Farey tessellation.
//
// Edge i of the base triangulation has slope v_i (1/0, 0/1, 1/1). Flipping
// edge k replaces v_k = u +- w by the other of u -+ w. A word realises the
// mapping class M when the final slopes are M^-1 v_i up to sign. The
// labelling gives a relabelling of edges; both it and its inverse are tried
// against the matrix-level loop condition and reported with the stretch
// factor computed from the resulting loop.

#include "mutloop/mutloop.hpp"

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using Slope = std::array<long long, 2>;
using Slopes = std::array<Slope, 3>;
using Mat2 = std::array<long long, 4>;  // row-major

Slope canon(Slope s) {
  if (s[0] < 0 || (s[0] == 0 && s[1] < 0)) return {-s[0], -s[1]};
  return s;
}

Slope apply(const Mat2& m, const Slope& s) { return canon({m[0] * s[0] + m[1] * s[1], m[2] * s[0] + m[3] * s[1]}); }

Mat2 inverse(const Mat2& m) { return {m[3], -m[1], -m[2], m[0]}; }  // det 1

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Slopes flip_slopes(Slopes v, std::size_t k) {
  const Slope& u = v[(k + 1) % 3];
  const Slope& w = v[(k + 2) % 3];
  const Slope plus = canon({u[0] + w[0], u[1] + w[1]});
  const Slope minus = canon({u[0] - w[0], u[1] - w[1]});
  v[k] = (v[k] == plus) ? minus : plus;
  return v;
}

Mat2 parse_word(const std::string& word) {
  Mat2 m{1, 0, 0, 1};
  for (char c : word) {
    if (c == 'L') m = multiply(m, {1, 0, 1, 1});
    else if (c == 'R') m = multiply(m, {1, 1, 0, 1});
    else throw std::invalid_argument("word must use letters L and R");
  }
  return m;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flip word search for once-punctured torus mapping classes"};
  std::string word = "LR";
  std::size_t max_length = 6;
  app.add_option("word", word, "product of L=[[1,0],[1,1]] and R=[[1,1],[0,1]]");
  app.add_option("--max-length", max_length, "longest flip word to try");
  CLI11_PARSE(app, argc, argv);

  using namespace mutloop;
  const Mat2 m = parse_word(word);
  const Mat2 minv = inverse(m);
  const Slopes base{{{1, 0}, {0, 1}, {1, 1}}};
  const ExchangeMatrix b = triangulation_to_matrix(torus_triangulation());
  std::cout << "word " << word << " action [[" << m[0] << "," << m[1] << "],[" << m[2] << "," << m[3]
            << "]] trace " << m[0] + m[3] << "\n";

  std::size_t found = 0;
  std::vector<std::size_t> path;
  auto search = [&](auto&& self, const Slopes& cur) -> void {
    if (!path.empty()) {
      std::vector<std::size_t> geometric(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (cur[j] == apply(minv, base[i])) geometric[i] = j;
      if (std::find(geometric.begin(), geometric.end(), 3) == geometric.end()) {
        const Permutation g(geometric);
        for (const auto& [label, perm] : {std::pair{"s", g}, std::pair{"s^-1", g.inverse()}}) {
          std::cout << "  path " << join(path) << "  " << label << " = [" << join(perm.images()) << "]";
          try {
            const MutationLoop loop = make_loop(b, path, perm);
            const StabilityReport r = detect_sign_stability(loop, Region::integer_rays);
            std::cout << "  loop ok, " << to_string(r.verdict);
            if (r.verified()) std::cout << ", lambda " << r.lambda << ", sign " << to_string(r.stable_sign);
          } catch (const std::exception& e) {
            std::cout << "  rejected: " << e.what();
          }
          std::cout << "\n";
        }
        ++found;
      }
    }
    if (path.size() == max_length) return;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!path.empty() && path.back() == k) continue;
      path.push_back(k);
      self(self, flip_slopes(cur, k));
      path.pop_back();
    }
  };
  search(search, base);
  std::cout << found << " flip words\n";
  return found ? 0 : 1;
}
