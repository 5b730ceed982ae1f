#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "stacklin/linser.hpp"
#include "stacklin/moduli.hpp"

using namespace stacklin;
using namespace fixtures;

namespace {

// Rows of basis replaced by a random unimodular recombination.
std::vector<IntVec> rebase(std::mt19937_64& rng, std::vector<IntVec> basis) {
  const std::size_t k = basis.size();
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = rng() % k, j = rng() % k;
    switch (rng() % 3) {
      case 0:
        if (i != j) basis[i] = add(basis[i], scale(basis[j], static_cast<long>(rng() % 5) - 2));
        break;
      case 1:
        std::swap(basis[i], basis[j]);
        break;
      default:
        basis[i] = scale(basis[i], -1);
    }
  }
  return basis;
}

}  // namespace

TEST(Moduli, WeightedProjectiveGoldens) {
  const auto a = section_example(p112_fan(), twists({0, 1, 2}));
  const auto ma = moduli_presentation(a.q, refinement_lattice(a.q), iv({-3, 2, 1}));
  EXPECT_EQ(ma.recognised(), "P(1,1,1,1,2)");
  EXPECT_EQ(ma.gamma.describe(), "Z");
  EXPECT_EQ(ma.unstable_supports, std::vector<Support>{0});

  const auto b = section_example(p112_fan(), twists({0, 1, 3}));
  EXPECT_EQ(moduli_presentation(b.q, refinement_lattice(b.q), iv({-2, 1, 1})).recognised(), "P(1,1,2,2,2,2)");

  const auto c = section_example(p123_fan(), twists({0, 1, 2, 3}));
  EXPECT_EQ(moduli_presentation(c.q, refinement_lattice(c.q), default_theta(c.q)).recognised(), "P(1,1,1,2,2,3)");

  const auto d = section_example(football_fan(), football_collection());
  EXPECT_EQ(moduli_presentation(d.q, refinement_lattice(d.q), default_theta(d.q)).recognised(), "P(1,1,2,2)");
}

TEST(Moduli, TautologicalBundlesAndTheta) {
  const auto ex = section_example(p112_fan(), twists({0, 1, 2}));
  const auto m = moduli_presentation(ex.q, refinement_lattice(ex.q), iv({-3, 2, 1}));
  EXPECT_EQ(m.theta_delta, iv({1, 0, 0}));
  EXPECT_EQ(m.tautological, ivs({{0, 0, 0}, {-1, 1, 0}, {-1, 0, 1}}));
  // theta pairs positively with the generator of the rank one quotient.
  ASSERT_EQ(m.theta_class.size(), 1U);
  EXPECT_GT(m.theta_class[0], 0);
  for (std::size_t a = 0; a < ex.q.num_arrows(); ++a)
    EXPECT_EQ(m.arrow_weights[a], m.gamma.project(reduced(ex.q.incidence_of(a))));
}

TEST(Moduli, NonGenericWeightIsRejected) {
  const auto ex = section_example(p112_fan(), twists({0, 1, 2}));
  const Lattice r = refinement_lattice(ex.q);
  EXPECT_EQ(error_code([&] { moduli_presentation(ex.q, r, iv({0, 0, 0})); }), "NotGeneric");
  EXPECT_EQ(error_code([&] { moduli_presentation(ex.q, r, iv({1, 0, 0})); }), "NotAWeight");
}

TEST(Moduli, IndependentOfTheRefinementBasis) {
  std::mt19937_64 rng(41);
  std::vector<SectionExample> examples = section_examples();
  examples.push_back(section_example(football_fan(), football_collection()));
  for (const auto& ex : examples) {
    const Lattice r = refinement_lattice(ex.q);
    const IntVec theta = default_theta(ex.q);
    const auto reference = moduli_presentation(ex.q, r, theta);
    for (int trial = 0; trial < 5; ++trial) {
      const auto basis = rebase(rng, reduced_basis(r));
      const auto m = moduli_presentation(ex.q, basis, theta);
      EXPECT_TRUE(m.gamma.isomorphic_to(reference.gamma));
      EXPECT_EQ(m.gamma.projection(), reference.gamma.projection());
      EXPECT_EQ(m.arrow_weights, reference.arrow_weights);
      EXPECT_EQ(m.theta_class, reference.theta_class);
      EXPECT_EQ(m.unstable_supports, reference.unstable_supports);
      EXPECT_EQ(m.recognised(), reference.recognised());
    }
  }
}
