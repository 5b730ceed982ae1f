#include "stacklin/stability.hpp"

#include <algorithm>
#include <map>

#include "stacklin/cone.hpp"
#include "stacklin/errors.hpp"
#include "stacklin/lp.hpp"
#include "stacklin/scan.hpp"

namespace stacklin {

std::string to_string(Status s) {
  switch (s) {
    case Status::unstable:
      return "unstable";
    case Status::strictly_semistable:
      return "strictly_semistable";
    case Status::stable:
      return "stable";
  }
  return "unstable";
}

StabilityProblem::StabilityProblem(std::size_t dimension, std::vector<IntVec> variable_weights,
                                   std::vector<IntVec> lineality)
    : dimension_(dimension), weights_(std::move(variable_weights)), lineality_(std::move(lineality)) {
  if (weights_.size() > kMaxSupportBits) fail_computation("TooManyVariables", "at most 64 variables are supported");
  for (const auto& w : weights_)
    if (w.size() != dimension_) fail_computation("DimensionMismatch", "weight of wrong length");
  for (const auto& l : lineality_)
    if (l.size() != dimension_) fail_computation("DimensionMismatch", "lineality vector of wrong length");
}

StabilityProblem StabilityProblem::refined(const LabelledQuiver& q, const std::vector<IntVec>& reduced_refinement,
                                           bool z_invertible) {
  std::vector<IntVec> weights;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) weights.push_back(reduced(q.incidence_of(a)));
  const std::size_t dim = q.num_vertices() - 1;
  if (z_invertible) return StabilityProblem(dim, std::move(weights), reduced_refinement);
  for (const auto& b : reduced_refinement) weights.push_back(b);
  return StabilityProblem(dim, std::move(weights), {});
}

Status StabilityProblem::status(const RatVec& theta, Support support) const {
  RationalCone cone;
  cone.dimension = dimension_;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (contains(support, i)) cone.generators.push_back(to_rational(weights_[i]));
  for (const auto& l : lineality_) cone.lineality.push_back(to_rational(l));
  if (!in_cone(cone, theta)) return Status::unstable;
  if (spans_ambient(cone) && in_relative_interior(cone, theta)) return Status::stable;
  return Status::strictly_semistable;
}

std::vector<Support> StabilityProblem::weight_classes() const {
  std::map<IntVec, std::size_t> index;
  std::vector<Support> classes;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    auto [it, fresh] = index.emplace(weights_[i], classes.size());
    if (fresh) classes.push_back(0);
    classes[it->second] |= Support{1} << i;
  }
  return classes;
}

Status git_status(const LabelledQuiver& q, const Lattice& r, const IntVec& theta, Support arrows, Support zs,
                  bool z_invertible) {
  validate_weight(theta, q.num_vertices());
  auto p = StabilityProblem::refined(q, reduced_basis(r), z_invertible);
  Support support = arrows & full_support(q.num_arrows());
  if (!z_invertible) support |= (zs & full_support(r.rank())) << q.num_arrows();
  return p.status(to_rational(reduced(theta)), support);
}

Status filtration_status(const LabelledQuiver& q, const Lattice& r, const IntVec& theta, Support arrows) {
  const std::size_t n = q.num_vertices();
  if (n > kMaxFiltrationVertices) fail_computation("TooManyVertices", "filtration enumeration limited to 20 vertices");
  validate_weight(theta, n);
  const auto basis = r.basis_vectors();

  std::vector<std::uint32_t> closed;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t t = 1; t < all; ++t) {
    bool ok = true;
    for (std::size_t a = 0; a < q.num_arrows() && ok; ++a)
      if (contains(arrows, a) && ((t >> q.arrows[a].tail) & 1U) && !((t >> q.arrows[a].head) & 1U)) ok = false;
    if (ok) closed.push_back(t);
  }
  auto evaluate = [&](const IntVec& w, std::uint32_t t) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((t >> i) & 1U) s += w[i];
    return s;
  };

  // Pinning a vertex outside every set rules out the constant combinations,
  // which are trivial one-parameter subgroups.
  bool boundary = false;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint32_t> sets;
    for (auto t : closed)
      if (!((t >> v) & 1U)) sets.push_back(t);
    if (sets.empty()) continue;
    std::vector<RatVec> rows(1 + basis.size(), RatVec(sets.size()));
    RatVec rhs(1 + basis.size());
    RatVec objective(sets.size());
    rhs[0] = 1;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      rows[0][k] = 1;
      for (std::size_t b = 0; b < basis.size(); ++b) rows[1 + b][k] = evaluate(basis[b], sets[k]);
      objective[k] = evaluate(theta, sets[k]);
    }
    LpResult res = minimize(rows, rhs, objective);
    if (res.status == LpStatus::infeasible) continue;
    if (res.value < 0) return Status::unstable;
    if (res.value == 0) boundary = true;
  }
  return boundary ? Status::strictly_semistable : Status::stable;
}

bool is_generic_on(const StabilityProblem& p, const RatVec& theta, const std::vector<Support>& supports) {
  const auto statuses = scan_statuses(p, theta, supports);
  return std::none_of(statuses.begin(), statuses.end(), [](Status s) { return s == Status::strictly_semistable; });
}

bool is_generic(const StabilityProblem& p, const RatVec& theta) {
  const auto classes = p.weight_classes();
  if (classes.size() > kMaxScanBits) fail_computation("TooManyArrows", "more than 20 distinct weights to scan");
  return is_generic_on(p, theta, subsets_of_classes(classes));
}

bool is_generic(const LabelledQuiver& q, const Lattice& r, const IntVec& theta) {
  validate_weight(theta, q.num_vertices());
  if (q.num_arrows() > kMaxScanBits) fail_computation("TooManyArrows", "more than 20 arrows to scan");
  return is_generic(StabilityProblem::refined(q, reduced_basis(r), true), to_rational(reduced(theta)));
}

std::vector<Support> maximal_unstable_supports(const StabilityProblem& p, const RatVec& theta) {
  const auto classes = p.weight_classes();
  if (classes.size() > kMaxScanBits) fail_computation("TooManyArrows", "more than 20 distinct weights to scan");
  const auto supports = subsets_of_classes(classes);
  const auto statuses = scan_statuses(p, theta, supports);
  std::vector<Support> unstable;
  for (std::size_t i = 0; i < supports.size(); ++i)
    if (statuses[i] == Status::unstable) unstable.push_back(supports[i]);
  std::vector<Support> maximal;
  for (auto s : unstable)
    if (std::none_of(unstable.begin(), unstable.end(), [&](Support t) { return t != s && is_subset(s, t); }))
      maximal.push_back(s);
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace stacklin
