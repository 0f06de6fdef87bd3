#include "mutloop/stability.hpp"
#include "mutloop/surfaces.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mutloop;

namespace {

bool has_self_folded(const IdealTriangulation& t) {
  for (const auto& tri : t.triangles)
    if (is_self_folded(tri)) return true;
  return false;
}

IdealTriangulation apply_flips(IdealTriangulation t, const MutationPath& word) {
  for (std::size_t k : word) t = flip(t, k);
  return t;
}

}  // namespace

TEST(Surfaces, TorusGivesMarkovMatrix) {
  EXPECT_EQ(triangulation_to_matrix(torus_triangulation()), ExchangeMatrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
  EXPECT_EQ(count_vertices(torus_triangulation()), 1u);
}

TEST(Surfaces, SphereWithFourPunctures) {
  const auto tri = sphere4_triangulation();
  EXPECT_NO_THROW(validate(tri));
  EXPECT_EQ(count_vertices(tri), 4u);
  // One +1 per ccw pair in each face, worked out face by face.
  const ExchangeMatrix expected{{0, 1, -1, -1, 1, 0},  {-1, 0, 1, 1, 0, -1}, {1, -1, 0, 0, -1, 1},
                                {1, -1, 0, 0, -1, 1},  {-1, 0, 1, 1, 0, -1}, {0, 1, -1, -1, 1, 0}};
  EXPECT_EQ(triangulation_to_matrix(tri), expected);
}

TEST(Surfaces, RelabelIsEquivariant) {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const auto tri = rng.uniform(0, 1) ? torus_triangulation() : sphere4_triangulation();
    const Permutation s = oracle::random_perm(rng, tri.edge_count());
    EXPECT_EQ(triangulation_to_matrix(relabel(tri, s)), s.act(triangulation_to_matrix(tri)));
  }
}

TEST(Surfaces, FlipIsAnInvolution) {
  for (const auto& tri : {torus_triangulation(), sphere4_triangulation()})
    for (std::size_t k = 0; k < tri.edge_count(); ++k) {
      EXPECT_EQ(flip(flip(tri, k), k), tri);
      EXPECT_NO_THROW(validate(flip(tri, k)));
    }
  EXPECT_THROW(flip(torus_triangulation(), 3), std::out_of_range);
}

TEST(Surfaces, FlipMatchesMutationAlongRandomWalks) {
  Rng rng(72);
  for (const auto& start : {torus_triangulation(), sphere4_triangulation()}) {
    for (int walk = 0; walk < 20; ++walk) {
      IdealTriangulation tri = start;
      for (int step = 0; step < 12; ++step) {
        // Walks stay among triangulations without self-folded triangles.
        std::vector<IdealTriangulation> next;
        for (std::size_t k = 0; k < tri.edge_count(); ++k) {
          const auto flipped = flip(tri, k);
          if (has_self_folded(flipped)) continue;
          EXPECT_EQ(triangulation_to_matrix(flipped), mutate_matrix(triangulation_to_matrix(tri), k));
          next.push_back(flipped);
        }
        ASSERT_FALSE(next.empty());
        tri = next[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(next.size()) - 1))];
      }
    }
  }
}

TEST(Surfaces, SelfFoldedTrianglesAreRejected) {
  EXPECT_TRUE(is_self_folded({0, 0, 1}));
  EXPECT_FALSE(is_self_folded({0, 1, 2}));
  const IdealTriangulation folded{0, 3, {{0, 0, 1}, {1, 2, 2}}};
  EXPECT_THROW(triangulation_to_matrix(folded), std::invalid_argument);
  EXPECT_THROW(flip(folded, 0), std::invalid_argument);
}

TEST(Surfaces, ValidationErrors) {
  EXPECT_THROW(validate(IdealTriangulation{1, 1, {{0, 1, 2}}}), std::invalid_argument);
  EXPECT_THROW(validate(IdealTriangulation{1, 1, {{0, 1, 2}, {0, 1, 1}}}), std::invalid_argument);
  EXPECT_THROW(validate(IdealTriangulation{1, 1, {{0, 1, 2}, {0, 1, 5}}}), std::invalid_argument);
  EXPECT_THROW(validate(IdealTriangulation{0, 3, {{0, 1, 2}, {0, 1, 2}}}), std::invalid_argument);
  EXPECT_THROW(validate(IdealTriangulation{0, 1, {}}), std::invalid_argument);
  EXPECT_THROW(builtin_triangulation("klein-bottle"), std::invalid_argument);
}

TEST(Catalog, FlipWordsCloseUpToTheRelabelling) {
  for (const auto& name : builtin_mapping_class_names()) {
    const auto [tri, spec] = builtin_mapping_class(name);
    const auto end = apply_flips(tri, spec.flip_word);
    EXPECT_EQ(spec.relabel.act(triangulation_to_matrix(tri)), triangulation_to_matrix(end)) << name;
    EXPECT_NO_THROW(mapping_class_loop(name));
  }
  EXPECT_THROW(builtin_mapping_class("torus-X"), std::invalid_argument);
}

TEST(Catalog, StretchFactors) {
  for (const std::string name : {"torus-LR", "torus-RL", "torus-LLR"}) {
    const auto [tri, spec] = builtin_mapping_class(name);
    const auto r = detect_sign_stability(mapping_class_loop(name));
    ASSERT_TRUE(r.verified()) << name << ": " << r.reason;
    EXPECT_NEAR(r.lambda, *spec.expected_stretch, 1e-9) << name;
    EXPECT_NEAR(r.lambda_check, *spec.expected_stretch, 1e-9) << name;
  }
  const auto inv = detect_sign_stability(inverse_loop(mapping_class_loop("torus-LR")));
  ASSERT_TRUE(inv.verified());
  EXPECT_NEAR(inv.lambda, (3 + std::sqrt(5.0)) / 2, 1e-9);
}

TEST(Catalog, DehnTwistsAreNotUniformlyStable) {
  Budget b;
  b.max_iterations = 80;
  b.ray_samples = 32;
  for (const std::string name : {"torus-L", "torus-R"}) {
    const auto r = detect_sign_stability(mapping_class_loop(name), Region::integer_rays, b);
    EXPECT_FALSE(r.verified()) << name;
  }
}
