#include "mutloop/io.hpp"
#include "mutloop/stability.hpp"
#include "mutloop/surfaces.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mutloop;

namespace {

const ExchangeMatrix kA2{{0, 1}, {-1, 0}};
const ExchangeMatrix kMarkov{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
const double kGoldenSq = (3 + std::sqrt(5.0)) / 2;

RatVector v(std::initializer_list<long long> xs) {
  RatVector out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

MutationLoop kk_loop(std::size_t k) { return make_loop(kMarkov, {k, k}, Permutation::identity(3)); }

Budget small_budget() {
  Budget b;
  b.max_iterations = 60;
  b.ray_samples = 24;
  return b;
}

}  // namespace

TEST(TropicalSign, Examples) {
  EXPECT_EQ(to_string(tropical_sign(kA2, {0, 1}).word), "++");
  EXPECT_EQ(to_string(tropical_sign(kMarkov, {0, 1}).word), "++");
  EXPECT_THROW(tropical_sign(kA2, {}), std::invalid_argument);
  EXPECT_FALSE(tropical_sign(kMarkov, {0, 1}).perturbed_point);
}

TEST(TropicalSign, FirstLetterIsPlusAndConstantOnInterior) {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
    const ExchangeMatrix b = oracle::random_skew(rng, n, 3);
    const MutationPath path = oracle::random_path(rng, n, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto sign = tropical_sign(b, path);
    ASSERT_TRUE(is_strict(sign.word));
    EXPECT_EQ(sign.word.front(), Sign::plus);
    for (int s = 0; s < 5; ++s) {
      TropicalPoint w(n);
      for (auto& c : w) c = Rational(rng.uniform(1, 500), rng.uniform(1, 40));
      const auto word = transport_along_path(b, path, w).second;
      // Only strict words can be compared; a zero marks a wall hit by the sample.
      if (is_strict(word)) EXPECT_EQ(word, sign.word);
    }
  }
}

TEST(SignCone, PathExamples) {
  EXPECT_TRUE(cone_equal(sign_cone(kA2, {0}, parse_sign_word("+")), PolyhedralCone{2, {v({1, 0})}}));
  EXPECT_TRUE(cone_equal(sign_cone(kMarkov, {0, 1}, parse_sign_word("++")), PolyhedralCone{3, {v({1, 0, 0}), v({0, 1, 0})}}));
  for (std::size_t k = 0; k < 3; ++k) {
    RatVector row(3, Rational(0));
    row[k] = 1;
    for (std::size_t power = 1; power <= 3; ++power) {
      SignWord eps;
      for (std::size_t r = 0; r < power; ++r) {
        eps.push_back(Sign::plus);
        eps.push_back(Sign::minus);
      }
      EXPECT_TRUE(cone_equal(sign_cone(kk_loop(k), eps, power), PolyhedralCone{3, {row}}));
    }
  }
  EXPECT_THROW(sign_cone(kA2, {0}, parse_sign_word("0")), std::invalid_argument);
  EXPECT_THROW(sign_cone(kA2, {0, 1}, parse_sign_word("+")), std::invalid_argument);
}

TEST(SignCone, PointsSeeTheirOwnSign) {
  Rng rng(52);
  int strict = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
    const ExchangeMatrix b = oracle::random_skew(rng, n, 3);
    const MutationPath path = oracle::random_path(rng, n, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto w = oracle::random_point(rng, n);
    const auto word = transport_along_path(b, path, w).second;
    if (!is_strict(word)) continue;
    ++strict;
    const auto cone = sign_cone(b, path, word);
    EXPECT_TRUE(cone.contains(w));
    // Points in the interior have exactly this sign.
    if (cone.contains_in_interior(w)) EXPECT_EQ(transport_along_path(b, path, w).second, word);
  }
  EXPECT_GT(strict, 50);
}

TEST(SignCone, LoopConesAreNested) {
  const MutationLoop lr = mapping_class_loop("torus-LR");
  LoopConeBuilder builder(lr, parse_sign_word("-+"));
  PolyhedralCone prev = builder.extend();
  for (int n = 0; n < 4; ++n) {
    const PolyhedralCone next = builder.extend();
    EXPECT_TRUE(cone_contains(prev, next).contained);
    prev = next;
  }
  EXPECT_EQ(builder.power(), 5u);
  EXPECT_THROW(sign_cone(lr, parse_sign_word("-+"), 0), std::invalid_argument);
}

TEST(Stability, DoubleMutationIsStableOnInteriorOnly) {
  for (std::size_t k = 0; k < 3; ++k) {
    const auto inner = detect_sign_stability(kk_loop(k), Region::interior_c_plus, small_budget());
    ASSERT_TRUE(inner.verified()) << inner.reason;
    EXPECT_EQ(to_string(inner.stable_sign), "+-");
    EXPECT_EQ(*inner.stable_matrix_E, IntMatrix::identity(3));
    EXPECT_EQ(*inner.stable_matrix_E_check, IntMatrix::identity(3));
    EXPECT_NEAR(inner.lambda, 1, 1e-12);
    EXPECT_NEAR(inner.lambda_check, 1, 1e-12);
    // Coordinate rays with x_k = 0 are fixed and keep a zero sign.
    const auto closed = detect_sign_stability(kk_loop(k), Region::cone_c_plus, small_budget());
    EXPECT_EQ(closed.verdict, Verdict::failed);
  }
}

TEST(Stability, RankOneFlipNeverSettles) {
  const ExchangeMatrix zero{{0}};
  const MutationLoop flip = make_loop(zero, {0}, Permutation::identity(1));
  EXPECT_EQ(detect_sign_stability(flip, Region::interior_c_plus, small_budget()).verdict, Verdict::failed);
}

TEST(Stability, TorusLR) {
  const auto r = detect_sign_stability(mapping_class_loop("torus-LR"));
  ASSERT_TRUE(r.verified()) << r.reason;
  EXPECT_EQ(to_string(r.stable_sign), "-+");
  EXPECT_EQ(r.stabilization_bound, 3u);
  EXPECT_NEAR(r.lambda, kGoldenSq, 1e-9);
  EXPECT_NEAR(r.lambda_check, kGoldenSq, 1e-9);
  EXPECT_EQ(r.rays.size(), 64u);
}

TEST(Stability, PentagonFails) {
  const MutationLoop pent = make_loop(kA2, {0, 1, 0, 1, 0}, Permutation({1, 0}));
  const auto r = detect_sign_stability(pent, Region::cone_c_plus, small_budget());
  EXPECT_EQ(r.verdict, Verdict::failed);
  EXPECT_FALSE(r.stable_matrix_E);
}

TEST(Stability, EmptyPathAndBudgets) {
  const MutationLoop empty = make_loop(kMarkov, {}, Permutation::identity(3));
  EXPECT_EQ(detect_sign_stability(empty).verdict, Verdict::failed);
  Budget b;
  b.max_iterations = 0;
  EXPECT_THROW(detect_sign_stability(kk_loop(0), Region::cone_c_plus, b), std::invalid_argument);
  b = {};
  b.ray_samples = 0;
  EXPECT_THROW(detect_sign_stability(kk_loop(0), Region::cone_c_plus, b), std::invalid_argument);
}

TEST(Stability, TinyBudgetIsInconclusive) {
  Budget b;
  b.max_iterations = 1;
  const auto r = detect_sign_stability(mapping_class_loop("torus-LR"), Region::cone_c_plus, b);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
}

TEST(Stability, DeterministicReports) {
  const MutationLoop lr = mapping_class_loop("torus-LR");
  const auto a = io::to_json(detect_sign_stability(lr), true).dump();
  const auto b = io::to_json(detect_sign_stability(lr), true).dump();
  EXPECT_EQ(a, b);
}

TEST(Stability, RaySignIgnoresPositiveRescaling) {
  const MutationLoop lr = mapping_class_loop("torus-LR");
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    TropicalPoint w = oracle::random_point(rng, 3);
    if (l1_norm(w) == 0) continue;
    const Rational factor(rng.uniform(1, 30), rng.uniform(1, 7));
    TropicalPoint scaled = w;
    for (auto& c : scaled) c *= factor;
    const auto a = iterate_ray(lr, w, small_budget());
    const auto b = iterate_ray(lr, scaled, small_budget());
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.final_sign, b.final_sign);
    EXPECT_EQ(a.stabilized_at, b.stabilized_at);
  }
}

TEST(SampleRays, RegionsAndCounts) {
  Budget b;
  b.ray_samples = 30;
  const auto closed = sample_rays(3, Region::cone_c_plus, b);
  EXPECT_EQ(closed.size(), 30u);
  for (const auto& r : closed)
    for (const auto& c : r) EXPECT_GE(c, 0);
  for (const auto& r : sample_rays(3, Region::interior_c_plus, b))
    for (const auto& c : r) EXPECT_GT(c, 0);
  int negative = 0;
  for (const auto& r : sample_rays(3, Region::nonneg_and_nonpos, b)) {
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& c : r) {
      all_nonneg = all_nonneg && c >= 0;
      all_nonpos = all_nonpos && c <= 0;
    }
    EXPECT_TRUE(all_nonneg || all_nonpos);
    negative += all_nonpos;
  }
  EXPECT_GE(negative, 10);
  for (const auto& r : sample_rays(3, Region::integer_rays, b)) {
    EXPECT_EQ(primitive_integer_ray(r), r);
    EXPECT_NE(l1_norm(r), 0);
  }
  // Structural rays are kept even above the sample count.
  b.ray_samples = 1;
  EXPECT_EQ(sample_rays(3, Region::integer_rays, b).size(), 8u);
  EXPECT_EQ(parse_region("interior-C-plus"), Region::interior_c_plus);
  EXPECT_THROW(parse_region("everywhere"), std::invalid_argument);
}

TEST(ConeStabilization, DoubleMutationStabilizesImmediately) {
  for (std::size_t k = 0; k < 3; ++k) {
    const auto s = check_cone_stabilization(kk_loop(k), parse_sign_word("+-"), 10);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->n, 1u);
    RatVector row(3, Rational(0));
    row[k] = 1;
    EXPECT_TRUE(cone_equal(s->cone, PolyhedralCone{3, {row}}));
  }
}

TEST(ConeStabilization, TorusLR) {
  const MutationLoop lr = mapping_class_loop("torus-LR");
  const auto s = check_cone_stabilization(lr, parse_sign_word("-+"), 20);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->n, 2u);
  EXPECT_TRUE(cone_equal(s->cone, PolyhedralCone{3, {v({-1, 0, -2}), v({0, 0, -1}), v({0, 1, 0})}}));
  // The stable cone is mapped into itself by the stable matrix.
  const auto r = detect_sign_stability(lr);
  for (const auto& ray : extreme_rays(s->cone)) EXPECT_TRUE(s->cone.contains(*r.stable_matrix_E * ray));
  EXPECT_EQ(check_cone_stabilization(mapping_class_loop("torus-LLR"), parse_sign_word("-+-"), 20)->n, 1u);
}

TEST(ConeStabilization, DehnTwistsStabilizeOnOneSideOnly) {
  EXPECT_EQ(check_cone_stabilization(mapping_class_loop("torus-L"), parse_sign_word("+"), 8)->n, 4u);
  EXPECT_FALSE(check_cone_stabilization(mapping_class_loop("torus-L"), parse_sign_word("-"), 8));
  EXPECT_FALSE(check_cone_stabilization(mapping_class_loop("torus-R"), parse_sign_word("+"), 8));
  EXPECT_EQ(check_cone_stabilization(mapping_class_loop("torus-R"), parse_sign_word("-"), 8)->n, 4u);
}

TEST(XFilling, Examples) {
  const auto zero = check_x_filling({Rational(0), Rational(1), Rational(2)}, kMarkov, 3);
  EXPECT_FALSE(zero.filling_to_depth);
  ASSERT_TRUE(zero.witness);
  EXPECT_TRUE(zero.witness->empty());
  const auto ones = check_x_filling(all_ones(3), kMarkov, 2);
  EXPECT_TRUE(ones.filling_to_depth);
  EXPECT_EQ(ones.charts_checked, 10u);
  EXPECT_EQ(check_x_filling(all_ones(3), kMarkov, 0).charts_checked, 1u);
  // mu_1 sends x_3 = -2 to -2 + 2*1 = 0.
  const auto hit = check_x_filling(v({1, 1, -2}), kMarkov, 2);
  EXPECT_FALSE(hit.filling_to_depth);
  ASSERT_TRUE(hit.witness);
  EXPECT_EQ(*hit.witness, MutationPath{0});
  ExchangeMatrix b = kMarkov;
  RatVector x = v({1, 1, -2});
  for (std::size_t k : *hit.witness) {
    x = oracle::mutate_point(b.matrix(), k, x);
    b = mutate_matrix(b, k);
  }
  bool has_zero = false;
  for (const auto& c : x) has_zero = has_zero || c == 0;
  EXPECT_TRUE(has_zero);
  EXPECT_THROW(check_x_filling(all_ones(2), kMarkov, 1), std::invalid_argument);
}

TEST(NorthSouth, TorusLR) {
  const auto ns = check_north_south(mapping_class_loop("torus-LR"));
  ASSERT_TRUE(ns.north_south_on_samples) << ns.summary;
  EXPECT_TRUE(ns.non_parabolic);
  EXPECT_EQ(to_string(ns.sign_at_attracting), "-+");
  EXPECT_EQ(to_string(ns.sign_at_repelling), "+-");
  EXPECT_NEAR(ns.lambda_forward, kGoldenSq, 1e-9);
  EXPECT_NEAR(ns.lambda_backward, kGoldenSq, 1e-9);
  EXPECT_TRUE(ns.reciprocal_consistent);
  EXPECT_EQ(ns.forward_palindromy, Palindromy::anti_palindromic);
  ASSERT_TRUE(ns.attracting_filling);
  EXPECT_TRUE(ns.attracting_filling->filling_to_depth);
  EXPECT_EQ(ns.attracting_filling->charts_checked, 22u);
}

TEST(NorthSouth, DoubleMutationHasNoNorthSouth) {
  const auto ns = check_north_south(kk_loop(1), small_budget());
  EXPECT_FALSE(ns.north_south_on_samples);
  EXPECT_FALSE(ns.attracting_ray);
}

TEST(UniformProbe, PseudoAnosovVersusDehnTwist) {
  const auto lr = probe_uniform_sign_stability(mapping_class_loop("torus-LR"));
  EXPECT_TRUE(lr.all_verified);
  EXPECT_EQ(lr.rotations.size(), 2u);
  EXPECT_FALSE(probe_uniform_sign_stability(mapping_class_loop("torus-L"), small_budget()).all_verified);
  EXPECT_FALSE(probe_uniform_sign_stability(mapping_class_loop("torus-R"), small_budget()).all_verified);
  EXPECT_TRUE(detect_sign_stability(mapping_class_loop("torus-L"), Region::interior_c_plus).verified());
}

TEST(ConeCriterion, AgreesWithPerronRayOnTorusLR) {
  const MutationLoop lr = mapping_class_loop("torus-LR");
  const auto r = detect_sign_stability(lr);
  const auto s = check_cone_stabilization(lr, r.stable_sign, 20);
  ASSERT_TRUE(s);
  const auto c = cone_criterion_check(s->cone, *r.stable_matrix_E, *r.spectrum);
  EXPECT_TRUE(c.applicable);
  EXPECT_TRUE(c.maps_into_interior);
  EXPECT_EQ(c.power, 3u);
  EXPECT_TRUE(c.simple_dominant_inside);
  EXPECT_TRUE(c.agree);
  EXPECT_EQ(c.extreme_rays.size(), 3u);
}

TEST(ConeCriterion, HalfSpaceIsNotApplicable) {
  const auto c = cone_criterion_check(PolyhedralCone{3, {v({1, 0, 0})}}, IntMatrix::identity(3),
                                      spectral_summary(IntMatrix::identity(3)));
  EXPECT_FALSE(c.applicable);
}
