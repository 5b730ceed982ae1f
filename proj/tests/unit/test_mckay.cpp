#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "stacklin/mckay.hpp"

using namespace stacklin;
using namespace fixtures;

namespace {

AbelianAction with_sl(AbelianAction a) {
  a.require_sl = true;
  return a;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVec character_of(const AbelianAction& a, const Exponent& m) {
  IntVec c(a.invariant_factors.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += a.weights[k][i] * m[k];
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - floor_div(c[i], a.invariant_factors[i]) * a.invariant_factors[i];
  return c;
}

}  // namespace

TEST(McKay, QuiverShapes) {
  const auto q2 = mckay_quiver(cyclic(2, {1, 1}));
  EXPECT_EQ(q2.num_vertices(), 2U);
  EXPECT_EQ(q2.num_arrows(), 4U);
  EXPECT_EQ(q2.arrows[0].tail, 0U);
  EXPECT_EQ(q2.arrows[0].head, 1U);
  EXPECT_EQ(q2.arrows[0].label, iv({1, 0}));
  EXPECT_EQ(q2.arrows[2].label, iv({0, 1}));

  const auto q3 = mckay_quiver(cyclic(3, {1, 2}));
  EXPECT_EQ(q3.num_arrows(), 6U);
  EXPECT_EQ(mckay_quiver(cyclic(3, {1, 1, 1})).num_arrows(), 9U);

  AbelianAction trivial;
  trivial.weights = {IntVec{}, IntVec{}};
  const auto loops = mckay_quiver(trivial);
  EXPECT_EQ(loops.num_vertices(), 1U);
  EXPECT_EQ(loops.num_arrows(), 2U);
  for (const auto& a : loops.arrows) EXPECT_EQ(a.tail, a.head);
}

TEST(McKay, ElementsInMixedRadixOrder) {
  AbelianAction a;
  a.invariant_factors = iv({2, 2});
  a.weights = ivs({{1, 0}, {0, 1}, {1, 1}});
  const auto elements = group_elements(a);
  EXPECT_EQ(elements, ivs({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  for (std::size_t i = 0; i < elements.size(); ++i) EXPECT_EQ(element_index(a, elements[i]), i);
  EXPECT_EQ(character_group(a).describe(), "Z/2 + Z/2");
}

TEST(McKay, ValidationErrors) {
  EXPECT_EQ(error_code([] { validate(cyclic(1, {1, 1})); }), "BadInvariantFactors");
  AbelianAction bad_chain;
  bad_chain.invariant_factors = iv({2, 3});
  bad_chain.weights = ivs({{1, 0}, {0, 1}});
  EXPECT_EQ(error_code([&] { validate(bad_chain); }), "BadInvariantFactors");
  EXPECT_EQ(error_code([] { validate(cyclic(2, {})); }), "EmptyAction");
  AbelianAction short_weight = cyclic(2, {1, 1});
  short_weight.weights[0] = iv({1, 1});
  EXPECT_EQ(error_code([&] { validate(short_weight); }), "DimensionMismatch");
  EXPECT_EQ(error_code([] { validate(cyclic(4, {2, 2})); }), "WeightsDoNotGenerate");
  EXPECT_EQ(error_code([] { validate(cyclic(2, {1, 0})); }), "Quasireflection");
  EXPECT_EQ(error_code([] { validate(with_sl(cyclic(5, {1, 2}))); }), "NotSpecialLinear");
  EXPECT_EQ(error_code([] { validate(with_sl(cyclic(3, {1, 1, 1}))); }), "");
  EXPECT_EQ(error_code([] { mckay_quiver(cyclic(2, {1, 0})); }), "Quasireflection");
}

TEST(McKay, RefinementEqualsPicKernel) {
  for (const auto& a : mckay_actions()) EXPECT_TRUE(verify_r_equals_ker_pic(a));
}

TEST(McKay, BbarAndCanonicalBasis) {
  EXPECT_EQ(bbar(cyclic(2, {1, 1})), ivs({{-2}}));
  EXPECT_EQ(bbar(cyclic(3, {1, 2})), ivs({{-1, -1}, {-2, 1}}));
  for (const auto& a : mckay_actions()) {
    const auto q = mckay_quiver(a);
    const auto basis = canonical_basis(a);
    EXPECT_EQ(basis.size(), q.num_vertices() - 1);
    std::vector<IntVec> full;
    for (const auto& b : basis) full.push_back(expand(b));
    EXPECT_EQ(Lattice(full, q.num_vertices()), refinement_lattice(q));
    const auto candidates = bbar(a);
    for (const auto& b : basis) EXPECT_NE(std::find(candidates.begin(), candidates.end(), b), candidates.end());
  }
}

TEST(McKay, WallCrossingOfTheSmallestAction) {
  const auto report = wall_cross(cyclic(2, {1, 1}));
  EXPECT_EQ(report.theta1, iv({2, -2}));
  EXPECT_EQ(report.theta2, iv({-1, 1}));
  EXPECT_TRUE(report.z_all_nonzero_verified);
  EXPECT_EQ(report.residual_group.describe(), "Z/2");
  EXPECT_EQ(report.chart_arrows, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(report.hilb_fixed_points.size(), 2U);
  ASSERT_EQ(report.walls.size(), 1U);
  EXPECT_EQ(report.walls[0].theta, RatVec{0});
}

TEST(McKay, WallCrossingAcrossActions) {
  for (const auto& a : mckay_actions()) {
    const auto report = wall_cross(a);
    EXPECT_TRUE(report.z_all_nonzero_verified);
    EXPECT_TRUE(report.residual_group.isomorphic_to(character_group(a)));
    EXPECT_GE(report.theta2_semistable_faces, report.hilb_fixed_points.size());
    EXPECT_FALSE(report.walls.empty());
  }
  AbelianAction trivial;
  trivial.weights = {IntVec{}, IntVec{}};
  EXPECT_EQ(error_code([&] { wall_cross(trivial); }), "TrivialGroup");
}

TEST(McKay, ClustersAreValidStaircases) {
  for (const auto& a : mckay_actions()) {
    const auto clusters = gcluster_oracle(a);
    const std::size_t order = group_elements(a).size();
    for (const auto& c : clusters) {
      ASSERT_EQ(c.staircase.size(), order);
      std::set<IntVec> characters;
      for (const auto& m : c.staircase) characters.insert(character_of(a, m));
      EXPECT_EQ(characters.size(), order);
      for (const auto& m : c.staircase)
        for (std::size_t k = 0; k < m.size(); ++k) {
          if (m[k] == 0) continue;
          Exponent below = m;
          --below[k];
          EXPECT_TRUE(std::binary_search(c.staircase.begin(), c.staircase.end(), below));
        }
      for (const auto& g : c.generators) {
        EXPECT_FALSE(std::binary_search(c.staircase.begin(), c.staircase.end(), g));
        for (const auto& h : c.generators)
          if (h != g) EXPECT_FALSE(divides(h, g));
      }
    }
  }
}

TEST(McKay, ClusterCountsMatchFixedPoints) {
  EXPECT_EQ(gcluster_oracle(cyclic(2, {1, 1})).size(), 2U);
  EXPECT_EQ(gcluster_oracle(cyclic(3, {1, 2})).size(), 3U);
  EXPECT_EQ(gcluster_oracle(cyclic(5, {1, 2})).size(), 3U);
  for (const auto& a : mckay_actions()) EXPECT_EQ(gcluster_oracle(a).size(), wall_cross(a).hilb_fixed_points.size());
  EXPECT_EQ(error_code([] { gcluster_oracle(cyclic(2, {1, 1, 1, 1})); }), "TooLarge");
}
