#include "mutloop/cone.hpp"
#include "mutloop/lp.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mutloop;

namespace {

RatVector v(std::initializer_list<long long> xs) {
  RatVector out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

PolyhedralCone cone(std::size_t dim, std::initializer_list<RatVector> rows) { return PolyhedralCone{dim, rows}; }

}  // namespace

TEST(Lp, StandardFormStatuses) {
  // min x + 2y, x + y = 3, x,y >= 0
  auto r = solve_standard_lp({v({1, 1})}, v({3}), v({1, 2}));
  ASSERT_EQ(r.status, LpResult::Status::optimal);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.x, v({3, 0}));
  EXPECT_EQ(solve_standard_lp({v({1, 1})}, v({-1}), v({1, 1})).status, LpResult::Status::infeasible);
  // min -x, x - y = 0
  EXPECT_EQ(solve_standard_lp({v({1, -1})}, v({0}), v({-1, 0})).status, LpResult::Status::unbounded);
  // Redundant equality rows.
  auto red = solve_standard_lp({v({1, 1}), v({2, 2})}, v({1, 2}), v({-1, 0}));
  ASSERT_EQ(red.status, LpResult::Status::optimal);
  EXPECT_EQ(red.value, -1);
}

TEST(Lp, BoxMinimum) {
  // min x1 + x2 over {x1 - x2 >= 0} in the unit box: (-1, -1).
  auto r = minimize_over_box({v({1, -1})}, v({1, 1}));
  EXPECT_EQ(r.value, -2);
  auto half = minimize_over_box({v({1, 0})}, v({1, 0}), Rational(1, 2));
  EXPECT_EQ(half.value, 0);
}

TEST(Cone, ContainmentExamples) {
  const auto x1 = cone(2, {v({1, 0})});
  const auto quadrant = cone(2, {v({1, 0}), v({0, 1})});
  const auto x2 = cone(2, {v({0, 1})});
  EXPECT_TRUE(cone_contains(x1, quadrant).contained);
  EXPECT_FALSE(cone_contains(quadrant, x1).contained);
  const auto res = cone_contains(x1, x2);
  ASSERT_FALSE(res.contained);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(x2.contains(*res.witness));
  EXPECT_FALSE(x1.contains(*res.witness));
  EXPECT_THROW(cone_contains(x1, cone(3, {v({1, 0, 0})})), std::invalid_argument);
}

TEST(Cone, EqualityIgnoresRepresentation) {
  const auto a = cone(2, {v({1, 0}), v({0, 1})});
  const auto b = cone(2, {v({2, 0}), v({0, 3}), v({1, 1})});
  EXPECT_TRUE(cone_equal(a, b));
  EXPECT_EQ(remove_redundant_rows(b), canonical(a));
  EXPECT_EQ(canonical(cone(2, {v({0, 0}), v({4, 2}), v({2, 1})})).rows, std::vector<RatVector>{v({2, 1})});
}

TEST(Cone, Dimension) {
  EXPECT_TRUE(is_full_dimensional(cone(2, {v({1, 0}), v({0, 1})})));
  EXPECT_FALSE(is_full_dimensional(cone(2, {v({1, 0}), v({-1, 0})})));
  EXPECT_TRUE(is_full_dimensional(cone(3, {})));
}

TEST(Cone, ExtremeRays) {
  const auto pos = cone(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  EXPECT_EQ(extreme_rays(pos), (std::vector<RatVector>{v({0, 0, 1}), v({0, 1, 0}), v({1, 0, 0})}));
  // {x >= y >= 0} in the plane.
  const auto wedge = cone(2, {v({1, -1}), v({0, 1})});
  EXPECT_EQ(extreme_rays(wedge), (std::vector<RatVector>{v({1, 0}), v({1, 1})}));
}

TEST(Cone, ContainmentAgreesWithExtremeRays) {
  Rng rng(31);
  int nontrivial = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto random_cone = [&] {
      PolyhedralCone c{3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}};
      for (int r = 0; r < 2; ++r) c.rows.push_back(v({rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)}));
      return c;
    };
    const auto a = random_cone();
    const auto b = random_cone();
    if (!is_full_dimensional(b)) continue;
    bool all_in = true;
    for (const auto& r : extreme_rays(b)) all_in = all_in && a.contains(r);
    const auto res = cone_contains(a, b);
    EXPECT_EQ(res.contained, all_in);
    if (!res.contained) {
      ++nontrivial;
      EXPECT_TRUE(b.contains(*res.witness));
      EXPECT_FALSE(a.contains(*res.witness));
    }
  }
  EXPECT_GT(nontrivial, 5);
}
