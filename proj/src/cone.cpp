#include "stacklin/cone.hpp"

#include "stacklin/errors.hpp"
#include "stacklin/lp.hpp"

namespace stacklin {
namespace {

void check(const RationalCone& c, const RatVec& p) {
  if (p.size() != c.dimension) fail_computation("DimensionMismatch", "point outside the cone's ambient space");
  for (const auto& g : c.generators)
    if (g.size() != c.dimension) fail_computation("DimensionMismatch", "cone generator of wrong length");
  for (const auto& l : c.lineality)
    if (l.size() != c.dimension) fail_computation("DimensionMismatch", "lineality vector of wrong length");
}

// Columns: generators, then lineality split into positive and negative parts.
std::vector<RatVec> combination_rows(const RationalCone& c, std::size_t extra) {
  const std::size_t g = c.generators.size();
  const std::size_t l = c.lineality.size();
  std::vector<RatVec> rows(c.dimension, RatVec(g + 2 * l + extra));
  for (std::size_t i = 0; i < c.dimension; ++i) {
    for (std::size_t j = 0; j < g; ++j) rows[i][j] = c.generators[j][i];
    for (std::size_t j = 0; j < l; ++j) {
      rows[i][g + 2 * j] = c.lineality[j][i];
      rows[i][g + 2 * j + 1] = -c.lineality[j][i];
    }
  }
  return rows;
}

bool member(const RationalCone& c, const RatVec& p) { return feasible(combination_rows(c, 0), p); }

// Maximize t subject to p = sum l_i g_i + lineality, l_i - t - s_i = 0, t + u = 1.
bool relative_interior(const RationalCone& c, const RatVec& p) {
  const std::size_t g = c.generators.size();
  if (g == 0) return member(c, p);
  const std::size_t base = g + 2 * c.lineality.size();
  const std::size_t t = base, u = base + 1, slack = base + 2;
  const std::size_t width = slack + g;
  std::vector<RatVec> rows = combination_rows(c, width - base);
  RatVec rhs = p;
  for (std::size_t i = 0; i < g; ++i) {
    RatVec row(width);
    row[i] = 1;
    row[t] = -1;
    row[slack + i] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  RatVec bound(width);
  bound[t] = 1;
  bound[u] = 1;
  rows.push_back(std::move(bound));
  rhs.push_back(1);
  RatVec objective(width);
  objective[t] = -1;
  LpResult r = minimize(rows, rhs, objective);
  return r.status == LpStatus::optimal && r.value < 0;
}

}  // namespace

std::size_t cone_rank(const RationalCone& c) {
  std::vector<IntVec> vs;
  for (const auto& g : c.generators) vs.push_back(primitive_integer(g));
  for (const auto& l : c.lineality) vs.push_back(primitive_integer(l));
  return rational_rank(vs, c.dimension);
}

bool spans_ambient(const RationalCone& c) { return cone_rank(c) == c.dimension; }

bool cone_query(const RationalCone& cone, const RatVec& point, ConeQuery mode) {
  check(cone, point);
  switch (mode) {
    case ConeQuery::member:
      return member(cone, point);
    case ConeQuery::relative_interior:
      return relative_interior(cone, point);
    case ConeQuery::spans_ambient:
      return spans_ambient(cone);
  }
  return false;
}

}  // namespace stacklin
