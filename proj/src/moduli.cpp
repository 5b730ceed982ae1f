#include "stacklin/moduli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stacklin/errors.hpp"
#include "stacklin/scan.hpp"

namespace stacklin {

std::string ModuliPresentation::recognised() const {
  if (!weighted_projective) return "";
  std::ostringstream out;
  out << "P(";
  for (std::size_t i = 0; i < weighted_projective->size(); ++i) out << (i ? "," : "") << (*weighted_projective)[i].get_str();
  out << ")";
  return out.str();
}

namespace {

AbelianGroup quotient_of_weights(const LabelledQuiver& q, const std::vector<IntVec>& basis) {
  const std::size_t d = q.num_vertices() - 1;
  return cokernel_presentation(IntMatrix::from_columns(basis, d));
}

}  // namespace

ModuliPresentation moduli_presentation(const LabelledQuiver& q, const Lattice& r, const IntVec& theta) {
  return moduli_presentation(q, reduced_basis(r), theta);
}

ModuliPresentation moduli_presentation(const LabelledQuiver& q, const std::vector<IntVec>& reduced_refinement,
                                       const IntVec& theta) {
  validate_weight(theta, q.num_vertices());
  if (q.num_arrows() > kMaxScanBits) fail_computation("TooManyArrows", "more than 20 arrows to scan");
  const auto problem = StabilityProblem::refined(q, reduced_refinement, true);
  const RatVec theta_red = to_rational(reduced(theta));
  if (!is_generic(problem, theta_red)) fail_computation("NotGeneric", "theta lies on a wall");

  ModuliPresentation m;
  m.gamma = quotient_of_weights(q, reduced_refinement);
  m.theta_class = m.gamma.project(reduced(theta));
  if (m.gamma.free_rank() == 1 && m.gamma.torsion().empty() && m.theta_class[0] < 0) {
    m.gamma = m.gamma.flip_free_coordinate(0);
    m.theta_class = m.gamma.project(reduced(theta));
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) m.arrow_weights.push_back(m.gamma.project(reduced(q.incidence_of(a))));
  m.unstable_supports = maximal_unstable_supports(problem, theta_red);
  m.theta_delta = unit_vector(q.num_vertices(), 0);
  m.tautological.push_back(IntVec(q.num_vertices()));
  for (std::size_t i = 1; i < q.num_vertices(); ++i) {
    IntVec t(q.num_vertices());
    t[i] = 1;
    t[0] = -1;
    m.tautological.push_back(std::move(t));
  }

  const bool origin_only = m.unstable_supports.size() == 1 && m.unstable_supports[0] == 0;
  const bool positive = std::all_of(m.arrow_weights.begin(), m.arrow_weights.end(),
                                    [](const IntVec& w) { return w.size() == 1 && w[0] > 0; });
  if (m.gamma.free_rank() == 1 && m.gamma.torsion().empty() && origin_only && positive && q.num_arrows() > 0) {
    std::vector<Int> w;
    for (const auto& a : m.arrow_weights) w.push_back(a[0]);
    std::sort(w.begin(), w.end());
    m.weighted_projective = std::move(w);
  }
  return m;
}

namespace {

Int binomial_count(std::size_t n, std::size_t k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

constexpr long kMaxDisplayCandidates = 2000000;

}  // namespace

UnstableIdealDisplay unstable_ideal_display(const LabelledQuiver& q, const Lattice& r, const IntVec& theta,
                                            int max_multiple) {
  validate_weight(theta, q.num_vertices());
  const std::size_t n = q.num_arrows();
  if (n > kMaxScanBits) fail_computation("TooManyArrows", "more than 20 arrows to scan");
  const auto basis = reduced_basis(r);
  const std::size_t d = q.num_vertices() - 1;
  const auto problem = StabilityProblem::refined(q, basis, true);
  const AbelianGroup gamma = quotient_of_weights(q, basis);

  std::vector<IntVec> arrow_class;
  for (std::size_t a = 0; a < n; ++a) arrow_class.push_back(gamma.project(reduced(q.incidence_of(a))));

  std::vector<Support> all_supports(std::size_t{1} << n);
  for (std::size_t s = 0; s < all_supports.size(); ++s) all_supports[s] = s;
  const auto statuses = scan_statuses(problem, to_rational(reduced(theta)), all_supports);

  Int spread = 0;
  for (const auto& x : theta) spread += abs(x);
  if (spread == 0) spread = 1;

  for (int m = 1; m <= max_multiple; ++m) {
    const IntVec target_weight = scale(reduced(theta), m);
    const IntVec target = gamma.project(target_weight);
    const Int degree = spread * m;
    if (binomial_count(static_cast<std::size_t>(degree.get_ui()) + n, n) > kMaxDisplayCandidates) break;

    std::vector<IntVec> solutions;
    IntVec u(n);
    auto recurse = [&](auto&& self, std::size_t a, long budget, const IntVec& acc) -> void {
      if (a == n) {
        if (gamma.equal(acc, target)) solutions.push_back(u);
        return;
      }
      IntVec running = acc;
      for (long e = 0; e <= budget; ++e) {
        u[a] = e;
        self(self, a + 1, budget - e, running);
        running = stacklin::add(running, arrow_class[a]);
      }
      u[a] = 0;
    };
    recurse(recurse, 0, degree.get_si(), gamma.zero());

    std::vector<IntVec> minimal;
    for (const auto& s : solutions) {
      bool dominated = std::any_of(solutions.begin(), solutions.end(), [&](const IntVec& t) {
        if (t == s) return false;
        for (std::size_t i = 0; i < n; ++i)
          if (t[i] > s[i]) return false;
        return true;
      });
      if (!dominated) minimal.push_back(s);
    }
    std::set<Support> supports;
    for (const auto& s : minimal) {
      Support sup = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s[i] != 0) sup |= Support{1} << i;
      supports.insert(sup);
    }
    bool agrees = true;
    for (std::size_t s = 0; s < all_supports.size() && agrees; ++s) {
      const bool cut_out = std::none_of(supports.begin(), supports.end(), [&](Support g) { return is_subset(g, s); });
      agrees = cut_out == (statuses[s] == Status::unstable);
    }
    if (!agrees) continue;

    UnstableIdealDisplay out;
    out.multiple = m;
    const IntMatrix basis_columns = IntMatrix::from_columns(basis, d);
    const IntMatrix inc = q.incidence();
    for (const auto& s : minimal) {
      auto z = solve_integer(basis_columns, subtract(target_weight, reduced(inc.apply(s))));
      if (!z) fail_computation("InternalError", "monomial degree not in the refinement lattice coset");
      out.y_exponents.push_back(s);
      out.z_exponents.push_back(*z);
    }
    for (auto s : supports)
      if (std::none_of(supports.begin(), supports.end(), [&](Support t) { return t != s && is_subset(t, s); }))
        out.minimal_supports.push_back(s);
    return out;
  }
  fail_computation("StabilizationNotReached", "no multiple up to the limit matches the unstable locus");
}

}  // namespace stacklin
