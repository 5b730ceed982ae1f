#include "stacklin/toric.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stacklin/errors.hpp"
#include "stacklin/lp.hpp"

namespace stacklin {

std::vector<Support> CoxSpace::maximal_cones() const {
  std::vector<Support> cones;
  for (auto g : irrelevant) cones.push_back(full_support(num_vars) & ~g);
  return cones;
}

bool CoxSpace::is_semistable_support(Support nonzero) const {
  return std::any_of(irrelevant.begin(), irrelevant.end(), [&](Support g) { return is_subset(g, nonzero); });
}

void validate(const StackyFan& fan) {
  const std::size_t n = fan.rays.size();
  if (n > kMaxSupportBits) fail_validation("TooManyRays", "rays", "at most 64 rays are supported");
  std::set<IntVec> directions;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    if (fan.rays[i].size() != fan.rank) fail_validation("DimensionMismatch", field, "ray length differs from rank");
    if (is_zero(fan.rays[i])) fail_validation("ZeroRay", field, "ray is zero");
    if (!directions.insert(primitive_integer(to_rational(fan.rays[i]))).second)
      fail_validation("RepeatedRay", field, "ray direction repeated");
  }
  if (rational_rank(fan.rays, fan.rank) != fan.rank)
    fail_validation("RaysDoNotSpan", "rays", "rays do not span the ambient lattice rationally");
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const std::string field = "max_cones[" + std::to_string(c) + "]";
    std::vector<IntVec> generators;
    std::set<std::size_t> seen;
    for (auto r : fan.max_cones[c]) {
      if (r >= n) fail_validation("BadIndex", field, "ray index out of range");
      if (!seen.insert(r).second) fail_validation("BadIndex", field, "ray index repeated");
      used[r] = true;
      generators.push_back(fan.rays[r]);
    }
    if (rational_rank(generators, fan.rank) != generators.size())
      fail_validation("NonSimplicial", field, "cone rays are linearly dependent");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) fail_validation("UnusedRay", "rays[" + std::to_string(i) + "]", "ray lies in no maximal cone");
}

namespace {

int sign_of_det(const std::vector<IntVec>& rows, std::size_t rank) {
  return sgn(determinant(IntMatrix::from_rows(rows, rank)));
}

bool fan_is_complete(const StackyFan& fan) {
  std::vector<Support> cones;
  for (const auto& c : fan.max_cones) {
    if (c.size() != fan.rank) return false;
    cones.push_back(support_of(c));
  }
  for (std::size_t ci = 0; ci < cones.size(); ++ci) {
    for (auto r : members(cones[ci])) {
      const Support facet = cones[ci] & ~(Support{1} << r);
      std::vector<IntVec> rows;
      for (auto f : members(facet)) rows.push_back(fan.rays[f]);
      rows.push_back(fan.rays[r]);
      const int own = sign_of_det(rows, fan.rank);
      int neighbours = 0;
      for (std::size_t cj = 0; cj < cones.size(); ++cj) {
        if (cj == ci || !is_subset(facet, cones[cj])) continue;
        const Support extra = cones[cj] & ~facet;
        rows.back() = fan.rays[members(extra).front()];
        if (sign_of_det(rows, fan.rank) == -own) ++neighbours;
      }
      if (neighbours != 1) return false;
    }
  }
  return true;
}

}  // namespace

CoxSpace cox_space(const StackyFan& fan) {
  validate(fan);
  CoxSpace x;
  x.num_vars = fan.rays.size();
  x.pic = cokernel_presentation(IntMatrix::from_rows(fan.rays, fan.rank));
  for (std::size_t i = 0; i < x.num_vars; ++i) x.degrees.push_back(x.pic.image_of_basis(i));
  std::set<Support> complements;
  for (const auto& c : fan.max_cones) complements.insert(full_support(x.num_vars) & ~support_of(c));
  x.irrelevant.assign(complements.begin(), complements.end());
  x.complete = fan_is_complete(fan);
  return x;
}

CoxSpace cox_space_from_data(AbelianGroup pic, std::vector<IntVec> degrees, std::vector<Support> irrelevant) {
  CoxSpace x;
  x.num_vars = degrees.size();
  if (x.num_vars > kMaxSupportBits) fail_validation("TooManyVariables", "deg", "at most 64 variables are supported");
  if (pic.ambient() != x.num_vars) {
    std::vector<IntVec> columns;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i].size() != pic.coordinates())
        fail_validation("DimensionMismatch", "deg[" + std::to_string(i) + "]", "degree length differs from Pic coordinates");
      columns.push_back(degrees[i]);
    }
    pic = AbelianGroup(pic.free_rank(), pic.torsion(), IntMatrix::from_columns(columns, pic.coordinates()));
  }
  x.pic = std::move(pic);
  for (std::size_t i = 0; i < x.num_vars; ++i) x.degrees.push_back(x.pic.image_of_basis(i));
  for (std::size_t i = 0; i < irrelevant.size(); ++i)
    if (!is_subset(irrelevant[i], full_support(x.num_vars)))
      fail_validation("BadIndex", "irrelevant[" + std::to_string(i) + "]", "variable index out of range");
  std::sort(irrelevant.begin(), irrelevant.end());
  irrelevant.erase(std::unique(irrelevant.begin(), irrelevant.end()), irrelevant.end());
  if (irrelevant.empty()) fail_validation("EmptyIrrelevant", "irrelevant", "at least one irrelevant monomial is required");
  x.irrelevant = std::move(irrelevant);
  return x;
}

std::vector<IntVec> sections(const CoxSpace& x, const IntVec& cls_in) {
  const IntVec cls = x.pic.reduce(cls_in);
  const std::size_t n = x.num_vars;
  const std::size_t f = x.pic.free_rank();
  if (n == 0) return x.pic.is_zero(cls) ? std::vector<IntVec>{IntVec{}} : std::vector<IntVec>{};

  std::vector<RatVec> rows(f, RatVec(n));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = x.degrees[j][i];

  auto recession = rows;
  recession.push_back(RatVec(n, Rat(1)));
  RatVec recession_rhs(f);
  recession_rhs.push_back(1);
  if (feasible(recession, recession_rhs))
    fail_computation("InfinitelyManySections", "the degree polyhedron has a nonzero recession cone");

  RatVec rhs(f);
  for (std::size_t i = 0; i < f; ++i) rhs[i] = cls[i];
  std::vector<long> bound(n);
  Int box = 1;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec objective(n);
    objective[j] = -1;
    LpResult r = minimize(rows, rhs, objective);
    if (r.status == LpStatus::infeasible) return {};
    Int b;
    Rat top = -r.value;
    mpz_fdiv_q(b.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
    box *= b + 1;
    if (box > kMaxSectionBox)
      fail_computation("InfinitelyManySections", "candidate box exceeds " + std::to_string(kMaxSectionBox) + " points");
    bound[j] = b.get_si();
  }

  std::vector<IntVec> out;
  IntVec u(n);
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      if (x.pic.equal(x.pic.project(u), cls)) out.push_back(u);
      return;
    }
    for (long e = bound[j]; e >= 0; --e) {
      u[j] = e;
      self(self, j + 1);
    }
    u[j] = 0;
  };
  recurse(recurse, 0);
  return out;
}

bool is_basepoint_free(const CoxSpace& x, const IntVec& cls) {
  const auto secs = sections(x, cls);
  std::vector<Support> supports;
  for (const auto& u : secs) {
    Support s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) s |= Support{1} << i;
    supports.push_back(s);
  }
  for (auto g : x.irrelevant)
    if (std::none_of(supports.begin(), supports.end(), [&](Support s) { return is_subset(s, g); })) return false;
  return true;
}

AbelianGroup stabilizer_at_cone(const CoxSpace& x, Support cone) {
  const auto cones = x.maximal_cones();
  if (std::none_of(cones.begin(), cones.end(), [&](Support m) { return is_subset(cone, m); }))
    fail_validation("NotACone", "cone", "rays do not lie in a common maximal cone");
  std::vector<IntVec> killed;
  for (std::size_t i = 0; i < x.num_vars; ++i)
    if (!contains(cone, i)) killed.push_back(x.degrees[i]);
  return quotient_by(x.pic, killed);
}

std::vector<Support> all_cones(const CoxSpace& x) {
  std::set<Support> out;
  for (auto m : x.maximal_cones()) {
    for (Support s = m;; s = (s - 1) & m) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace stacklin
