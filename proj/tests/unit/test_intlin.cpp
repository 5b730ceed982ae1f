#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "stacklin/intlin.hpp"

using namespace stacklin;
using fixtures::iv;
using fixtures::ivs;

namespace {

Int laplace(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Int term = m(0, j) * laplace(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from the gcds of k x k minors.
IntVec determinantal_invariants(const IntMatrix& a) {
  IntVec out;
  Int previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(a.rows(), k, 0, cur, rows);
    choose(a.cols(), k, 0, cur, cols);
    Int g = 0;
    for (const auto& r : rows)
      for (const auto& c : cols) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(laplace(m)).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

}  // namespace

TEST(Intlin, SmithMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 6);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.left * a * s.right, s.diagonal);
    EXPECT_EQ(abs(laplace(s.left)), 1);
    EXPECT_EQ(abs(laplace(s.right)), 1);
    EXPECT_EQ(s.invariants(), determinantal_invariants(a)) << a.to_string();
    EXPECT_EQ(s.rank, rank(a));
  }
}

TEST(Intlin, SmithOfKnownMatrix) {
  const auto a = IntMatrix::from_rows(ivs({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), 3);
  EXPECT_EQ(smith_normal_form(a).invariants(), iv({2, 6, 12}));
}

TEST(Intlin, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(a), laplace(a));
  }
}

TEST(Intlin, HermiteIsCanonicalAndSpansTheSameLattice) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
    const IntMatrix h = hermite_normal_form(a);
    EXPECT_EQ(h.rows(), rank(a));
    const Lattice la(a.row_vectors(), a.cols());
    for (const auto& r : h.row_vectors()) EXPECT_TRUE(la.contains(r));
    const Lattice lh(h.row_vectors(), a.cols());
    for (const auto& r : a.row_vectors()) EXPECT_TRUE(lh.contains(r));
    // Pivots are positive and the entries above them are reduced.
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      while (h(i, col) == 0) ++col;
      EXPECT_GT(h(i, col), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h(k, col), 0);
        EXPECT_LT(h(k, col), h(i, col));
      }
    }
    // A unimodular change of generators leaves the form unchanged.
    IntMatrix shuffled = a;
    if (a.rows() > 1) {
      shuffled.swap_rows(0, a.rows() - 1);
      shuffled.add_row_multiple(0, 1, 3);
    }
    EXPECT_EQ(hermite_normal_form(shuffled), h);
  }
}

TEST(Intlin, KernelIsSaturatedAndComplete) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 2 + rng() % 2;
    const IntMatrix a = random_matrix(rng, 1 + rng() % 2, cols, 3);
    const IntMatrix k = kernel_basis(a);
    EXPECT_EQ(k.rows() + rank(a), cols);
    for (const auto& v : k.row_vectors()) EXPECT_TRUE(is_zero(a.apply(v)));
    const Lattice lk(k.row_vectors(), cols);
    // Every small kernel vector is an integer combination of the basis.
    IntVec v(cols);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == cols) {
        if (is_zero(a.apply(v))) EXPECT_TRUE(lk.contains(v)) << to_string(v);
        return;
      }
      for (long x = -4; x <= 4; ++x) {
        v[i] = x;
        walk(i + 1);
      }
    };
    walk(0);
  }
}

TEST(Intlin, SolveInteger) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, 5);
    IntVec x(a.cols());
    for (auto& e : x) e = static_cast<long>(rng() % 11) - 5;
    const IntVec b = a.apply(x);
    const auto sol = solve_integer(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a.apply(*sol), b);
  }
  const auto two = IntMatrix::from_rows(ivs({{2, 4}}), 2);
  EXPECT_FALSE(solve_integer(two, iv({1})).has_value());
  EXPECT_TRUE(solve_integer(two, iv({6})).has_value());
}

TEST(Intlin, LatticeOperations) {
  const Lattice a(ivs({{2, 0}, {0, 2}}), 2);
  const Lattice b(ivs({{0, 2}, {2, 2}}), 2);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(iv({4, -2})));
  EXPECT_FALSE(a.contains(iv({1, 0})));
  EXPECT_EQ(a.saturation(), Lattice(ivs({{1, 0}, {0, 1}}), 2));
  EXPECT_TRUE(a.rationally_contains(Lattice(ivs({{1, 1}}), 2)));
  EXPECT_FALSE(a.contains(Lattice(ivs({{1, 1}}), 2)));
  EXPECT_EQ(a.sum(Lattice(ivs({{1, 1}}), 2)), Lattice(ivs({{1, 1}, {0, 2}}), 2));
  const auto c = a.coordinates(iv({4, 6}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(IntMatrix::from_rows({*c}, c->size()) * a.basis(), IntMatrix::from_rows({iv({4, 6})}, 2));
}

TEST(Intlin, ScalarHelpers) {
  EXPECT_EQ(floor_div(-3, 2), -2);
  EXPECT_EQ(floor_div(3, 2), 1);
  EXPECT_EQ(floor_div(-4, 2), -2);
  EXPECT_EQ(floor_div(3, -2), -2);
  EXPECT_EQ(primitive_integer(RatVec{Rat(1, 2), Rat(-3, 4)}), iv({2, -3}));
  EXPECT_EQ(rational_rank(ivs({{1, 2}, {2, 4}}), 2), 1U);
  EXPECT_EQ(to_string(iv({1, -2})), "(1,-2)");
}
