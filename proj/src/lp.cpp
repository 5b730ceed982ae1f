#include "stacklin/lp.hpp"

#include <cstddef>
#include <limits>

#include "stacklin/errors.hpp"

namespace stacklin {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::vector<RatVec> a;
  RatVec b;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = a[r][c];
    for (auto& x : a[r]) x /= p;
    b[r] /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }

  // Minimizes cost over columns [0, usable). Returns false when unbounded.
  bool optimize(const RatVec& cost, std::size_t usable) {
    std::vector<bool> basic(a.empty() ? usable : a[0].size(), false);
    for (;;) {
      std::fill(basic.begin(), basic.end(), false);
      for (auto j : basis) basic[j] = true;
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < usable && enter == kNone; ++j) {
        if (basic[j]) continue;
        Rat reduced = cost[j];
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i][j] != 0) reduced -= cost[basis[i]] * a[i][j];
        if (reduced < 0) enter = j;
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult minimize(const std::vector<RatVec>& constraints, const RatVec& rhs, const RatVec& objective) {
  const std::size_t m = constraints.size();
  const std::size_t n = objective.size();
  if (rhs.size() != m) fail_computation("DimensionMismatch", "LP right-hand side length");

  Tableau t;
  t.a.assign(m, RatVec(n + m));
  t.b = rhs;
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (constraints[i].size() != n) fail_computation("DimensionMismatch", "LP constraint length");
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = flip ? Rat(-constraints[i][j]) : constraints[i][j];
    if (flip) t.b[i] = -t.b[i];
    t.a[i][n + i] = 1;
    t.basis[i] = n + i;
  }

  RatVec phase_one(n + m);
  for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = 1;
  t.optimize(phase_one, n + m);
  Rat infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= n) infeasibility += t.b[i];
  LpResult result;
  if (infeasibility != 0) return result;

  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.a.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n && col == kNone; ++j)
      if (t.a[i][j] != 0) col = j;
    if (col != kNone) {
      t.pivot(i, col);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  RatVec cost(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
  if (!t.optimize(cost, n)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.solution.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.basis.size(); ++i) result.solution[t.basis[i]] = t.b[i];
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += objective[j] * result.solution[j];
  return result;
}

bool feasible(const std::vector<RatVec>& constraints, const RatVec& rhs) {
  const std::size_t n = constraints.empty() ? 0 : constraints[0].size();
  return minimize(constraints, rhs, RatVec(n)).status != LpStatus::infeasible;
}

}  // namespace stacklin
