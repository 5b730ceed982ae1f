#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "stacklin/binomial.hpp"
#include "stacklin/linser.hpp"
#include "stacklin/mckay.hpp"
#include "stacklin/stability.hpp"

using namespace stacklin;
using namespace fixtures;

namespace {

// Direct reading of the morphism condition, one Cox support at a time.
bool morphism_oracle(const CoxSpace& x, const LabelledQuiver& q, const IntVec& theta) {
  const Lattice r = refinement_lattice(q);
  for (Support t = 0; t < (Support{1} << x.num_vars); ++t) {
    if (!x.is_semistable_support(t)) continue;
    Support arrows = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      bool nonzero = true;
      for (std::size_t i = 0; i < x.num_vars; ++i)
        if (q.arrows[a].label[i] != 0 && !contains(t, i)) nonzero = false;
      if (nonzero) arrows |= Support{1} << a;
    }
    if (git_status(q, r, theta, arrows, 0, true) == Status::unstable) return false;
  }
  return true;
}

}  // namespace

TEST(Linser, PsiMapAndNames) {
  const auto ex = section_example(p112_fan(), twists({0, 1, 2}));
  EXPECT_EQ(psi_map(ex.q), ivs({{1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto names = variable_names("x", 3);
  std::vector<std::string> rendered;
  for (const auto& e : psi_map(ex.q)) rendered.push_back(render_monomial(e, names));
  EXPECT_EQ(rendered, (std::vector<std::string>{"x1", "x2", "x1", "x2", "x3"}));
  EXPECT_EQ(render_monomial(iv({2, 0, -1}), names), "x1^2*x3^-1");
  EXPECT_EQ(default_theta(ex.q), iv({-2, 1, 1}));
}

TEST(Linser, MorphismGoldens) {
  const auto a = section_example(p112_fan(), twists({0, 1, 2}));
  EXPECT_TRUE(is_morphism(a.x, a.q, iv({-3, 2, 1})).morphism);

  const auto b = section_example(p123_fan(), twists({0, 1}));
  const auto check = is_morphism(b.x, b.q, iv({-1, 1}));
  EXPECT_FALSE(check.morphism);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_TRUE(b.x.is_semistable_support(*check.witness));
}

TEST(Linser, MorphismMatchesOracleAndSerialKernel) {
  std::mt19937_64 rng(61);
  std::vector<SectionExample> examples = section_examples();
  examples.push_back(section_example(football_fan(), football_collection()));
  examples.push_back(section_example(p123_fan(), twists({0, 1})));
  examples.push_back(section_example(p2_fan(), twists({0, 1, 2})));
  for (const auto& ex : examples) {
    const Lattice r = refinement_lattice(ex.q);
    for (int sample = 0; sample < 6; ++sample) {
      const IntVec theta = random_weight(rng, ex.q.num_vertices(), 4);
      if (!is_generic(ex.q, r, theta)) continue;
      const auto parallel = is_morphism(ex.x, ex.q, theta);
      const auto serial = is_morphism_serial(ex.x, ex.q, theta);
      EXPECT_EQ(parallel.morphism, serial.morphism);
      EXPECT_EQ(parallel.witness, serial.witness);
      EXPECT_EQ(parallel.morphism, morphism_oracle(ex.x, ex.q, theta)) << to_string(theta);
    }
  }
}

TEST(Linser, McKayMapsAreAlwaysMorphisms) {
  std::mt19937_64 rng(62);
  for (const auto& a : mckay_actions()) {
    const auto q = mckay_quiver(a);
    const CoxSpace x = mckay_cox_space(a);
    for (int sample = 0; sample < 3; ++sample) EXPECT_TRUE(is_morphism(x, q, random_weight(rng, q.num_vertices(), 3)).morphism);
  }
}

TEST(Linser, BasepointFreeCertificate) {
  const auto p123 = section_example(p123_fan(), twists({0, 1, 2, 3}));
  const auto none = bpf_certificate(p123.x, p123.collection, p123.q);
  EXPECT_TRUE(none.bpf_pairs.empty());
  EXPECT_FALSE(none.conclusive);

  const CoxSpace z2z2 = z2z2_cox();
  const auto q = quiver_of_sections(z2z2, z2z2_collection());
  const auto cert = bpf_certificate(z2z2, z2z2_collection(), q);
  EXPECT_EQ(cert.bpf_pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 5}}));
  EXPECT_EQ(cert.rank_collection, 1U);
  EXPECT_EQ(cert.rank_bpf, 1U);
  ASSERT_TRUE(cert.conclusive);
  ASSERT_TRUE(cert.theta.has_value());
  EXPECT_TRUE(is_generic(q, refinement_lattice(q), *cert.theta));
  EXPECT_TRUE(is_morphism(z2z2, q, *cert.theta).morphism);

  const auto p112 = section_example(p112_fan(), twists({0, 1, 2}));
  const auto c = bpf_certificate(p112.x, p112.collection, p112.q);
  ASSERT_TRUE(c.conclusive);
  EXPECT_TRUE(morphism_oracle(p112.x, p112.q, *c.theta));
}

TEST(Linser, Representability) {
  const CoxSpace football = cox_space(football_fan());
  EXPECT_TRUE(is_representable(football, football_collection()).representable);
  const CoxSpace p112 = cox_space(p112_fan());
  const auto r = is_representable(p112, twists({0, 2}));
  EXPECT_FALSE(r.representable);
  EXPECT_EQ(r.failing_cone, support_of({0, 1}));
  EXPECT_TRUE(is_representable(p112, twists({0, 1, 2})).representable);
}

TEST(Linser, ImageIdealVanishesOnTheParametrization) {
  std::mt19937_64 rng(63);
  for (const auto& ex : section_examples()) {
    const Lattice r = refinement_lattice(ex.q);
    const LatticeIdeal ideal = image_ideal(ex.q, r);
    const auto gb = saturate(ideal);
    ASSERT_FALSE(gb.elements.empty());
    for (int sample = 0; sample < 3; ++sample) {
      // y_a = x^label * chi^inc, z_b = chi^basis, at a random rational point.
      RatVec pt(ideal.monomial_map.rows());
      for (auto& v : pt) {
        v = Rat(static_cast<long>(2 + rng() % 4), static_cast<long>(1 + rng() % 4));
        v.canonicalize();
      }
      for (const auto& b : gb.elements) {
        auto value = [&](const Exponent& e) {
          Rat out = 1;
          for (std::size_t v = 0; v < e.size(); ++v)
            for (std::size_t k = 0; k < pt.size(); ++k) {
              const long p = ideal.monomial_map(k, v).get_si() * e[v];
              Rat f = 1;
              for (long i = 0; i < std::abs(p); ++i) f *= pt[k];
              out *= p >= 0 ? f : Rat(1) / f;
            }
          return out;
        };
        EXPECT_EQ(value(b.lead), value(b.trail));
      }
    }
  }
}

TEST(Linser, Limits) {
  AbelianGroup g(1, {}, IntMatrix(1, 0));
  std::vector<IntVec> degrees(21, iv({1}));
  const CoxSpace big = cox_space_from_data(g, degrees, {full_support(21)});
  LabelledQuiver q;
  q.label_rank = 21;
  q.vertices = ivs({{0}, {1}});
  q.arrows = {Arrow{0, 1, unit_vector(21, 0)}};
  EXPECT_EQ(error_code([&] { is_morphism(big, q, iv({-1, 1})); }), "TooManyVariables");
}
