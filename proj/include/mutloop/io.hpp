#pragma once

// JSON and TSV formats. File formats use 1-based indices; everything in
// memory is 0-based. Output is deterministic: object keys are sorted by
// nlohmann::json and doubles are printed with round-trip precision.

#include "mutloop/conjecture.hpp"
#include "mutloop/cone.hpp"
#include "mutloop/entropy.hpp"
#include "mutloop/seed.hpp"
#include "mutloop/spectra.hpp"
#include "mutloop/stability.hpp"
#include "mutloop/surfaces.hpp"
#include "mutloop/tropical.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutloop::io {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Scalars

inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

inline BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (boost::multiprecision::denominator(r) != 1) throw std::invalid_argument("expected an integer, got " + j.dump());
    return boost::multiprecision::numerator(r);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or \"p/q\" string, got " + j.dump());
}

/// 1-based index in a file to 0-based.
inline std::size_t index_from_json(const Json& j, std::size_t n) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected a 1-based index, got " + j.dump());
  const long long k = j.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw std::invalid_argument("index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(k - 1);
}

// ---------------------------------------------------------------------------
// Matrices, seeds, loops, points

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  IntMatrix m(n, j[0].is_array() ? j[0].size() : 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

inline ExchangeMatrix seed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b")) throw std::invalid_argument("seed JSON needs a \"b\" matrix");
  IntMatrix b = matrix_from_json(j.at("b"));
  if (b.rows() != b.cols()) throw std::invalid_argument("exchange matrix must be square");
  if (j.contains("n") && j.at("n") != Json(b.rows()))
    throw std::invalid_argument("seed \"n\" does not match the matrix size");
  const std::string conv = j.value("convention", std::string("paper"));
  if (conv == "fz") b = b.transpose();
  else if (conv != "paper") throw std::invalid_argument("seed convention must be \"paper\" or \"fz\"");
  return ExchangeMatrix(std::move(b));
}

inline Json to_json(const ExchangeMatrix& b) {
  return Json{{"n", b.rank()}, {"b", to_json(b.matrix())}, {"convention", "paper"}};
}

inline Json to_json(const Permutation& p) {
  Json a = Json::array();
  for (std::size_t v : p.images()) a.push_back(v + 1);
  return a;
}

inline Json path_to_json(const MutationPath& p) {
  Json a = Json::array();
  for (std::size_t k : p) a.push_back(k + 1);
  return a;
}

inline MutationPath path_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw std::invalid_argument("path must be an array of 1-based indices");
  MutationPath p;
  for (const auto& k : j) p.push_back(index_from_json(k, n));
  return p;
}

inline Permutation perm_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument("perm must list " + std::to_string(n) + " images");
  std::vector<std::size_t> im;
  for (const auto& k : j) im.push_back(index_from_json(k, n));
  return Permutation(std::move(im));
}

/// Path list like "1,2,1" (1-based).
inline MutationPath parse_path_list(const std::string& text, std::size_t n) {
  MutationPath p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long k = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      p.push_back(index_from_json(Json(k), n));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad path entry '" + item + "'");
    }
  }
  return p;
}

struct LoopSpec {
  MutationPath path;
  std::optional<Permutation> perm;  // absent: search for one
};

inline LoopSpec loop_spec_from_json(const Json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("path")) throw std::invalid_argument("loop JSON needs a \"path\"");
  LoopSpec s;
  s.path = path_from_json(j.at("path"), n);
  if (j.contains("perm")) s.perm = perm_from_json(j.at("perm"), n);
  return s;
}

inline Json to_json(const MutationLoop& loop) {
  return Json{{"seed", to_json(loop.base)}, {"path", path_to_json(loop.path)}, {"perm", to_json(loop.closing_perm)}};
}

inline Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline TropicalPoint point_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tropical point must be an array");
  TropicalPoint w;
  for (const auto& x : j) w.push_back(rational_from_json(x));
  return w;
}

inline Json to_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(to_json(x));
  return a;
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs) a.push_back(to_json(c));
  return a;
}

inline Json to_json(const SpectralSummary& s) {
  Json roots = Json::array();
  for (const auto& r : s.roots)
    roots.push_back(Json{{"re", to_json(r.value.real())}, {"im", to_json(r.value.imag())}, {"multiplicity", r.multiplicity}});
  Json j{{"rho", to_json(s.rho)},
         {"dominant_real", s.dominant_real},
         {"dominant_simple", s.dominant_simple},
         {"residual", to_json(s.residual)},
         {"char_poly", to_json(s.char_poly)},
         {"palindromy", to_string(palindrome_check(s.char_poly))},
         {"roots", roots}};
  j["perron_ray"] = s.perron_ray ? to_json(*s.perron_ray) : Json(nullptr);
  return j;
}

inline Json to_json(const PolyhedralCone& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) rows.push_back(to_json(r));
  return Json{{"dim", c.dim}, {"rows", rows}};
}

inline Json to_json(const Budget& b) {
  return Json{{"max_iterations", b.max_iterations}, {"ray_samples", b.ray_samples}, {"rng_seed", b.rng_seed}};
}

inline Json to_json(const RayDiagnostics& d) {
  Json trace = Json::array();
  for (const auto& [word, count] : d.trace) trace.push_back(Json{{"sign", to_string(word)}, {"count", count}});
  return Json{{"start", to_json(d.start)},
              {"status", to_string(d.status)},
              {"final_sign", to_string(d.final_sign)},
              {"stabilized_at", d.stabilized_at},
              {"iterations", d.iterations},
              {"saw_zero", d.saw_zero},
              {"trace", trace}};
}

inline Json to_json(const StabilityReport& r, bool with_rays = true) {
  Json j{{"region", to_string(r.region)},
         {"budget", to_json(r.budget)},
         {"verdict", to_string(r.verdict)},
         {"reason", r.reason},
         {"stable_sign", to_string(r.stable_sign)},
         {"stabilization_bound", r.stabilization_bound},
         {"lambda", to_json(r.lambda)},
         {"lambda_check", to_json(r.lambda_check)}};
  j["stable_matrix_E"] = r.stable_matrix_E ? to_json(*r.stable_matrix_E) : Json(nullptr);
  j["stable_matrix_E_check"] = r.stable_matrix_E_check ? to_json(*r.stable_matrix_E_check) : Json(nullptr);
  j["spectrum"] = r.spectrum ? to_json(*r.spectrum) : Json(nullptr);
  j["spectrum_check"] = r.spectrum_check ? to_json(*r.spectrum_check) : Json(nullptr);
  if (with_rays) {
    Json rays = Json::array();
    for (const auto& d : r.rays) rays.push_back(to_json(d));
    j["rays"] = rays;
  }
  return j;
}

inline Json to_json(const XFillingResult& x, std::size_t depth) {
  Json j{{"depth", depth}, {"charts_checked", x.charts_checked}};
  j["status"] = x.filling_to_depth ? "no-obstruction-to-depth-" + std::to_string(depth) : std::string("not-filling");
  j["witness"] = x.witness ? path_to_json(*x.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const NorthSouthReport& ns, std::size_t depth) {
  Json j{{"north_south_on_samples", ns.north_south_on_samples},
         {"non_parabolic", ns.non_parabolic},
         {"lambda_forward", to_json(ns.lambda_forward)},
         {"lambda_backward", to_json(ns.lambda_backward)},
         {"lambda_forward_inverse", to_json(ns.lambda_forward_inverse)},
         {"reciprocal_consistent", ns.reciprocal_consistent},
         {"forward_palindromy", to_string(ns.forward_palindromy)},
         {"sign_at_attracting", to_string(ns.sign_at_attracting)},
         {"sign_at_repelling", to_string(ns.sign_at_repelling)},
         {"forward_verdict", to_string(ns.forward.verdict)},
         {"backward_verdict", to_string(ns.backward.verdict)},
         {"summary", ns.summary}};
  j["attracting_ray"] = ns.attracting_ray ? to_json(*ns.attracting_ray) : Json(nullptr);
  j["repelling_ray"] = ns.repelling_ray ? to_json(*ns.repelling_ray) : Json(nullptr);
  j["attracting_filling"] = ns.attracting_filling ? to_json(*ns.attracting_filling, depth) : Json(nullptr);
  j["repelling_filling"] = ns.repelling_filling ? to_json(*ns.repelling_filling, depth) : Json(nullptr);
  return j;
}

inline Json to_json(const GrowthTrace& t) {
  Json a = Json::array();
  for (const auto& p : t) a.push_back(Json::array({p.n, to_json(p.value)}));
  return a;
}

inline std::string to_tsv(const GrowthTrace& t) {
  std::ostringstream out;
  out.precision(17);
  out << "n\tvalue\n";
  for (const auto& p : t) out << p.n << '\t' << p.value << '\n';
  return out.str();
}

inline Json to_json(const EntropyEstimate& e) {
  return Json{{"h_dfd", to_json(e.h_dfd)},
              {"h_per", to_json(e.h_per)},
              {"h_per_upper_bound_any_T", to_json(e.h_per)},
              {"T", to_json(e.T)},
              {"extrapolated", to_json(e.extrapolated)},
              {"growth_trace", to_json(e.growth_trace)},
              {"growth_trace_check", to_json(e.growth_trace_check)},
              {"orbit_trace", to_json(e.orbit_trace)}};
}

inline Json to_json(const MatrixPairCheck& c) {
  return Json{{"E", to_json(c.e)},
              {"E_check", to_json(c.e_check)},
              {"char_poly_E", to_json(c.p_e)},
              {"char_poly_E_check", to_json(c.p_e_check)},
              {"palindromy", to_string(c.palindromy)},
              {"char_polys_match_up_to_sign", c.polys_match},
              {"rho_E", to_json(c.rho)},
              {"rho_E_check", to_json(c.rho_check)},
              {"rho_gap", to_json(c.rho_gap)}};
}

inline Json to_json(const ConjectureReport& r) {
  return Json{{"sign_source", r.sign_source},
              {"sign", to_string(r.sign)},
              {"tol", to_json(r.tol)},
              {"presentation", to_json(r.presentation)},
              {"path", to_json(r.path)},
              {"counterexample", r.counterexample()}};
}

inline Json to_json(const HarnessCase& c) {
  Json j{{"index", c.index}, {"family", c.family}, {"loop", to_json(c.loop)}, {"report", to_json(c.report)}};
  j["point"] = c.point ? to_json(*c.point) : Json(nullptr);
  return j;
}

inline void write_reproducer(const std::string& path, const HarnessCase& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write reproducer '" + path + "'");
  out << to_json(c).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Triangulations

inline IdealTriangulation triangulation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("triangles")) throw std::invalid_argument("triangulation JSON needs \"triangles\"");
  IdealTriangulation t;
  t.genus = j.value("genus", 0);
  t.punctures = j.value("punctures", 0);
  const auto& tris = j.at("triangles");
  if (!tris.is_array()) throw std::invalid_argument("\"triangles\" must be an array");
  const std::size_t n = tris.size() * 3 / 2;
  for (const auto& tri : tris) {
    if (!tri.is_array() || tri.size() != 3) throw std::invalid_argument("each triangle lists three edges");
    t.triangles.push_back({index_from_json(tri[0], n), index_from_json(tri[1], n), index_from_json(tri[2], n)});
  }
  validate(t);
  return t;
}

inline Json to_json(const IdealTriangulation& t) {
  Json tris = Json::array();
  for (const auto& tri : t.triangles) tris.push_back(Json::array({tri[0] + 1, tri[1] + 1, tri[2] + 1}));
  return Json{{"genus", t.genus}, {"punctures", t.punctures}, {"triangles", tris}};
}

}  // namespace mutloop::io
