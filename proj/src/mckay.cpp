#include "stacklin/mckay.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "stacklin/cone.hpp"
#include "stacklin/errors.hpp"
#include "stacklin/linser.hpp"
#include "stacklin/scan.hpp"

namespace stacklin {
namespace {

constexpr std::size_t kMaxBasisSubsets = 1000000;
constexpr std::size_t kMaxPerturbations = 1000;

IntVec reduce_character(const AbelianAction& a, IntVec v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] %= a.invariant_factors[i];
    if (v[i] < 0) v[i] += a.invariant_factors[i];
  }
  return v;
}

IntVec generator(const AbelianAction& a, std::size_t j) {
  return unit_vector(a.invariant_factors.size(), j);
}

Lattice refinement_in_reduced(const LabelledQuiver& q) {
  return Lattice(reduced_basis(refinement_lattice(q)), q.num_vertices() - 1);
}

std::vector<RatVec> rational(const std::vector<IntVec>& vs) {
  std::vector<RatVec> out;
  for (const auto& v : vs) out.push_back(to_rational(v));
  return out;
}

// start * 2^(k+2) plus a random nonnegative combination of the directions,
// for k = 1, 2, ...; the first candidate is start itself.
template <typename Accept>
IntVec perturb(const IntVec& start, const std::vector<IntVec>& directions, std::uint64_t seed, Accept accept) {
  std::mt19937_64 engine(seed);
  for (std::size_t k = 0; k < kMaxPerturbations; ++k) {
    IntVec theta = start;
    if (k > 0) {
      theta = scale(start, Int(1) << static_cast<unsigned>(std::min<std::size_t>(k, 16) + 2));
      const std::uint64_t range = std::uint64_t{1} << std::min<std::size_t>(k, 8);
      for (const auto& d : directions) theta = add(theta, scale(d, static_cast<long>(engine() % (range + 1))));
    }
    if (accept(theta)) return theta;
  }
  fail_computation("VerificationFailed", "no generic weight found near the default stability condition");
}

std::string describe_support(Support s) {
  std::string out = "{";
  for (auto i : members(s)) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

}  // namespace

void validate(const AbelianAction& a) {
  const auto& d = a.invariant_factors;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string field = "invariant_factors[" + std::to_string(i) + "]";
    if (d[i] < 2) fail_validation("BadInvariantFactors", field, "invariant factors must be at least 2");
    if (i > 0 && d[i] % d[i - 1] != 0) fail_validation("BadInvariantFactors", field, "each factor must divide the next");
  }
  if (a.weights.empty()) fail_validation("EmptyAction", "weights", "at least one coordinate is required");
  for (std::size_t k = 0; k < a.weights.size(); ++k)
    if (a.weights[k].size() != d.size())
      fail_validation("DimensionMismatch", "weights[" + std::to_string(k) + "]", "one entry per invariant factor");

  const AbelianGroup group = character_group(a);
  std::vector<IntVec> images;
  for (const auto& w : a.weights) images.push_back(group.project(w));
  if (!generates(group, images)) fail_validation("WeightsDoNotGenerate", "weights", "the action is not faithful");
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < images.size(); ++j)
      if (j != i) others.push_back(images[j]);
    if (!generates(group, others))
      fail_validation("Quasireflection", "weights[" + std::to_string(i) + "]",
                      "some group element fixes every coordinate but this one");
  }
  if (a.require_sl) {
    IntVec total(d.size());
    for (const auto& w : a.weights) total = add(total, w);
    if (!is_zero(reduce_character(a, total)))
      fail_validation("NotSpecialLinear", "weights", "the weights do not sum to zero");
  }
}

std::vector<IntVec> group_elements(const AbelianAction& a) {
  const auto& d = a.invariant_factors;
  std::vector<IntVec> out{IntVec(d.size())};
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<IntVec> next;
    for (const auto& e : out)
      for (long c = 0; c < d[i]; ++c) {
        IntVec f = e;
        f[i] = c;
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

std::size_t element_index(const AbelianAction& a, const IntVec& element) {
  const IntVec e = reduce_character(a, element);
  std::size_t index = 0;
  for (std::size_t i = 0; i < e.size(); ++i) index = index * a.invariant_factors[i].get_ui() + e[i].get_ui();
  return index;
}

AbelianGroup character_group(const AbelianAction& a) {
  const std::size_t t = a.invariant_factors.size();
  IntMatrix relations(t, t);
  for (std::size_t i = 0; i < t; ++i) relations(i, i) = a.invariant_factors[i];
  return cokernel_presentation(relations);
}

LabelledQuiver mckay_quiver(const AbelianAction& a) {
  validate(a);
  const AbelianGroup group = character_group(a);
  const auto elements = group_elements(a);
  LabelledQuiver q;
  q.label_rank = a.dimension();
  for (const auto& e : elements) q.vertices.push_back(group.project(e));
  for (std::size_t k = 0; k < a.dimension(); ++k)
    for (std::size_t rho = 0; rho < elements.size(); ++rho)
      q.arrows.push_back(Arrow{rho, element_index(a, add(elements[rho], a.weights[k])), unit_vector(a.dimension(), k)});
  validate(q);
  return q;
}

CoxSpace mckay_cox_space(const AbelianAction& a) {
  validate(a);
  const AbelianGroup group = character_group(a);
  std::vector<IntVec> degrees;
  for (const auto& w : a.weights) degrees.push_back(group.project(w));
  return cox_space_from_data(group, degrees, {Support{0}});
}

bool verify_r_equals_ker_pic(const AbelianAction& a) {
  const LabelledQuiver q = mckay_quiver(a);
  const Lattice r = refinement_lattice(q);
  const Lattice kernel = pic_kernel(q, character_group(a)).integral;
  return r == kernel && r.rank() + 1 == q.num_vertices();
}

std::vector<IntVec> bbar(const AbelianAction& a) {
  validate(a);
  const auto elements = group_elements(a);
  std::vector<IntVec> out;
  std::set<IntVec> seen;
  for (std::size_t j = 0; j < a.invariant_factors.size(); ++j) {
    const IntVec g = generator(a, j);
    for (const auto& rho : elements) {
      IntVec full(elements.size());
      full[element_index(a, g)] -= 1;
      full[element_index(a, subtract(rho, g))] -= 1;
      full[element_index(a, rho)] += 1;
      IntVec v = reduced(full);
      if (!is_zero(v) && seen.insert(v).second) out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<IntVec> canonical_basis(const AbelianAction& a) {
  const LabelledQuiver q = mckay_quiver(a);
  const std::size_t d = q.num_vertices() - 1;
  const Lattice r = refinement_in_reduced(q);
  const auto candidates = bbar(a);
  if (!(Lattice(candidates, d) == r)) fail_computation("VerificationFailed", "the elements of Bbar do not generate R");

  const std::size_t k = r.rank();
  if (k == 0) return {};
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (std::size_t visited = 0; visited < kMaxBasisSubsets; ++visited) {
    std::vector<IntVec> chosen;
    for (auto i : pick) chosen.push_back(candidates[i]);
    if (Lattice(chosen, d) == r) return chosen;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  fail_computation("NoBasisInBbar", "no subset of Bbar is a basis of R");
}

WallCrossReport wall_cross(const AbelianAction& a) {
  const LabelledQuiver q = mckay_quiver(a);
  const std::size_t d = q.num_vertices() - 1;
  if (d == 0) fail_computation("TrivialGroup", "wall crossing needs a nontrivial group");
  WallCrossReport report;
  report.basis = canonical_basis(a);
  const auto& basis = report.basis;
  const std::size_t na = q.num_arrows();
  const Support arrow_mask = full_support(na);
  const Support z_mask = full_support(na + basis.size()) & ~arrow_mask;

  const LatticeIdeal refined = refined_ideal(q, basis, false);
  const StabilityProblem refined_problem = StabilityProblem::refined(q, basis, false);
  const auto refined_faces = orbit_faces(refined.monomial_map);

  const LatticeIdeal plain = forget_refinement(q);
  std::vector<IntVec> arrow_weights;
  for (std::size_t i = 0; i < na; ++i) arrow_weights.push_back(reduced(q.incidence_of(i)));
  const StabilityProblem plain_problem(d, arrow_weights, {});
  const auto plain_faces = orbit_faces(plain.monomial_map);

  // theta1 in the interior of cone(basis).
  RationalCone basis_cone{d, rational(basis), {}};
  IntVec start1(d);
  for (std::size_t j = 0; j < a.invariant_factors.size(); ++j) {
    const std::size_t v = element_index(a, generator(a, j));
    start1[v - 1] -= a.invariant_factors[j];
  }
  if (!in_relative_interior(basis_cone, to_rational(start1))) {
    start1 = IntVec(d);
    for (const auto& b : basis) start1 = add(start1, b);
  }
  const IntVec theta1 = perturb(start1, basis, 0x746865746131ULL, [&](const IntVec& t) {
    const RatVec r = to_rational(t);
    return in_relative_interior(basis_cone, r) && is_generic_on(refined_problem, r, refined_faces);
  });

  // theta2 in the interior of the positive orthant.
  std::vector<IntVec> units;
  for (std::size_t i = 0; i < d; ++i) units.push_back(unit_vector(d, i));
  const IntVec theta2 = perturb(IntVec(d, Int(1)), units, 0x746865746132ULL, [&](const IntVec& t) {
    const RatVec r = to_rational(t);
    return is_generic_on(refined_problem, r, refined_faces) && is_generic_on(plain_problem, r, plain_faces);
  });
  report.theta1 = expand(theta1);
  report.theta2 = expand(theta2);
  const RatVec th1 = to_rational(theta1), th2 = to_rational(theta2);

  // theta1 side: every semistable orbit has all z nonzero, leaving [A^n / G].
  const auto side1 = scan_statuses(refined_problem, th1, refined_faces);
  for (std::size_t i = 0; i < refined_faces.size(); ++i) {
    if (side1[i] == Status::unstable) continue;
    ++report.theta1_semistable_faces;
    if ((refined_faces[i] & z_mask) != z_mask)
      fail_computation("VerificationFailed",
                       "face " + describe_support(refined_faces[i]) + " misses a z-coordinate but is semistable");
  }
  report.z_all_nonzero_verified = true;
  report.residual_group = cokernel_presentation(IntMatrix::from_columns(basis, d));
  if (!report.residual_group.isomorphic_to(character_group(a)))
    fail_computation("VerificationFailed", "Wt(Q)/R is not isomorphic to the character group");

  // Chart: the arrows out of the trivial character; every other arrow is one
  // of them times a z-monomial.
  const IntMatrix basis_columns = IntMatrix::from_columns(basis, d);
  for (std::size_t i = 0; i < na; ++i)
    if (q.arrows[i].tail == 0) report.chart_arrows.push_back(i);
  for (std::size_t i = 0; i < na; ++i) {
    if (q.arrows[i].tail == 0) continue;
    const auto partner = std::find_if(report.chart_arrows.begin(), report.chart_arrows.end(),
                                      [&](std::size_t c) { return q.arrows[c].label == q.arrows[i].label; });
    if (partner == report.chart_arrows.end() ||
        !solve_integer(basis_columns, reduced(subtract(q.incidence_of(i), q.incidence_of(*partner)))))
      fail_computation("VerificationFailed", "arrow " + std::to_string(i) + " is not a chart monomial times z");
  }

  // theta2 side: forgetting z is a bijection of semistable orbits.
  const auto side2 = scan_statuses(refined_problem, th2, refined_faces);
  std::set<Support> projected;
  for (std::size_t i = 0; i < refined_faces.size(); ++i) {
    if (side2[i] == Status::unstable) continue;
    ++report.theta2_semistable_faces;
    if (!projected.insert(refined_faces[i] & arrow_mask).second)
      fail_computation("VerificationFailed",
                       "two semistable faces agree on y: " + describe_support(refined_faces[i] & arrow_mask));
  }
  const auto plain_side2 = scan_statuses(plain_problem, th2, plain_faces);
  std::set<Support> plain_semistable;
  for (std::size_t i = 0; i < plain_faces.size(); ++i)
    if (plain_side2[i] != Status::unstable) plain_semistable.insert(plain_faces[i]);
  if (projected != plain_semistable)
    fail_computation("VerificationFailed", "semistable orbits differ after eliminating z");

  report.hilb_fixed_points = fixed_stable_points(plain.monomial_map, plain_faces, plain_problem, th2);
  const auto refined_fixed = fixed_stable_points(refined.monomial_map, refined_faces, refined_problem, th2);
  if (refined_fixed.size() != report.hilb_fixed_points.size())
    fail_computation("VerificationFailed", "fixed point counts differ after eliminating z");

  report.walls = wall_path(refined_problem, refined_faces, th1, th2);
  if (report.walls.empty()) fail_computation("VerificationFailed", "no wall separates the two chambers");
  return report;
}

std::vector<MonomialCluster> gcluster_oracle(const AbelianAction& a) {
  validate(a);
  const std::size_t n = a.dimension();
  const auto elements = group_elements(a);
  const std::size_t order = elements.size();
  if (n > kMaxClusterDimension || order > kMaxClusterOrder)
    fail_computation("TooLarge", "cluster enumeration limited to n <= 3 and |G| <= 60");

  auto character = [&](const Exponent& m) {
    IntVec c(a.invariant_factors.size());
    for (std::size_t k = 0; k < n; ++k) c = add(c, scale(a.weights[k], m[k]));
    return element_index(a, c);
  };
  auto predecessors_in = [&](const Exponent& m, const std::set<Exponent>& s) {
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k] == 0) continue;
      Exponent p = m;
      --p[k];
      if (!s.contains(p)) return false;
    }
    return true;
  };
  auto corners = [&](const std::set<Exponent>& s) {
    std::set<Exponent> out;
    for (const auto& m : s)
      for (std::size_t k = 0; k < n; ++k) {
        Exponent c = m;
        ++c[k];
        if (!s.contains(c) && predecessors_in(c, s)) out.insert(c);
      }
    return out;
  };

  std::set<std::set<Exponent>> visited, complete;
  std::vector<std::set<Exponent>> stack{{Exponent(n)}};
  visited.insert(stack.back());
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    if (s.size() == order) {
      complete.insert(s);
      continue;
    }
    std::vector<bool> used(order, false);
    for (const auto& m : s) used[character(m)] = true;
    for (const auto& c : corners(s)) {
      if (used[character(c)]) continue;
      auto next = s;
      next.insert(c);
      if (visited.insert(next).second) stack.push_back(std::move(next));
    }
  }

  std::vector<MonomialCluster> out;
  for (const auto& s : complete) {
    const auto g = corners(s);
    out.push_back(MonomialCluster{{s.begin(), s.end()}, {g.begin(), g.end()}});
  }
  return out;
}

}  // namespace stacklin
