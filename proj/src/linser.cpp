#include "stacklin/linser.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "stacklin/errors.hpp"
#include "stacklin/scan.hpp"
#include "stacklin/stability.hpp"

namespace stacklin {

std::vector<IntVec> psi_map(const LabelledQuiver& q) {
  std::vector<IntVec> rows;
  for (const auto& a : q.arrows) rows.push_back(a.label);
  return rows;
}

std::vector<std::string> variable_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string render_monomial(const IntVec& exponents, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    out << (first ? "" : "*") << names[i];
    if (exponents[i] != 1) out << "^" << exponents[i].get_str();
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

namespace {

MorphismCheck morphism_scan(const CoxSpace& x, const LabelledQuiver& q, const IntVec& theta, bool parallel) {
  const std::size_t n = x.num_vars;
  if (n > kMaxMorphismVariables) fail_computation("TooManyVariables", "morphism scan limited to 20 Cox variables");
  if (q.label_rank != n) fail_validation("DimensionMismatch", "quiver", "labels do not match the Cox variables");
  validate_weight(theta, q.num_vertices());

  std::vector<Support> label_support(q.num_arrows(), 0);
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      if (q.arrows[a].label[i] != 0) label_support[a] |= Support{1} << i;

  const std::size_t count = std::size_t{1} << n;
  std::vector<Support> arrows_of(count, 0);
  for (std::size_t t = 0; t < count; ++t)
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
      if (is_subset(label_support[a], t)) arrows_of[t] |= Support{1} << a;

  std::vector<Support> distinct(arrows_of.begin(), arrows_of.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const auto problem = StabilityProblem::refined(q, reduced_basis(refinement_lattice(q)), true);
  const RatVec th = to_rational(reduced(theta));
  const auto statuses = parallel ? scan_statuses(problem, th, distinct) : scan_statuses_serial(problem, th, distinct);

  for (std::size_t t = 0; t < count; ++t) {
    const auto pos = std::lower_bound(distinct.begin(), distinct.end(), arrows_of[t]) - distinct.begin();
    if (statuses[static_cast<std::size_t>(pos)] == Status::unstable && x.is_semistable_support(t))
      return MorphismCheck{false, t};
  }
  return MorphismCheck{};
}

}  // namespace

MorphismCheck is_morphism(const CoxSpace& x, const LabelledQuiver& q, const IntVec& theta) {
  return morphism_scan(x, q, theta, true);
}

MorphismCheck is_morphism_serial(const CoxSpace& x, const LabelledQuiver& q, const IntVec& theta) {
  return morphism_scan(x, q, theta, false);
}

IntVec default_theta(const LabelledQuiver& q) {
  IntVec theta(q.num_vertices(), Int(1));
  theta[0] = -static_cast<long>(q.num_vertices() - 1);
  return theta;
}

BpfCertificate bpf_certificate(const CoxSpace& x, const std::vector<IntVec>& collection, const LabelledQuiver& q) {
  BpfCertificate cert;
  const std::size_t r = collection.size();
  const std::size_t f = x.pic.free_rank();
  auto free_part = [&](const IntVec& c) { return IntVec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(f)); };

  std::vector<IntVec> free_classes, bpf_free;
  for (const auto& c : collection) free_classes.push_back(free_part(c));
  std::vector<IntVec> generators;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const IntVec cls = x.pic.subtract(collection[j], collection[i]);
      if (sections(x, cls).empty() || !is_basepoint_free(x, cls)) continue;
      cert.bpf_pairs.emplace_back(i, j);
      bpf_free.push_back(free_part(cls));
      IntVec s(r);
      s[j] += 1;
      s[i] -= 1;
      generators.push_back(reduced(s));
    }
  cert.rank_collection = rational_rank(free_classes, f);
  cert.rank_bpf = rational_rank(bpf_free, f);
  if (cert.bpf_pairs.empty() || cert.rank_bpf != cert.rank_collection) return cert;

  const auto basis = reduced_basis(refinement_lattice(q));
  std::vector<IntVec> directions = generators;
  for (const auto& b : basis) {
    directions.push_back(b);
    directions.push_back(scale(b, -1));
  }
  IntVec interior(r - 1);
  for (const auto& g : generators) interior = add(interior, g);

  const auto problem = StabilityProblem::refined(q, basis, true);
  std::mt19937_64 engine(0x5eedULL);
  for (std::size_t k = 0; k < kMaxCertificateAttempts; ++k) {
    cert.attempts = k + 1;
    IntVec theta = interior;
    if (k > 0) {
      const unsigned shift = static_cast<unsigned>(std::min<std::size_t>(k, 16) + 2);
      theta = scale(interior, Int(1) << shift);
      const std::uint64_t range = std::uint64_t{1} << std::min<std::size_t>(k, 8);
      for (const auto& d : directions) theta = add(theta, scale(d, static_cast<long>(engine() % (range + 1))));
    }
    const IntVec full = expand(theta);
    if (!is_generic(problem, to_rational(theta))) continue;
    if (!is_morphism(x, q, full).morphism) continue;
    cert.conclusive = true;
    cert.theta = full;
    return cert;
  }
  fail_computation("CertificateSearchFailed", "no generic weight found in the base-point-free cone");
}

Representability is_representable(const CoxSpace& x, const std::vector<IntVec>& collection) {
  for (auto cone : all_cones(x)) {
    const AbelianGroup stabilizer = stabilizer_at_cone(x, cone);
    std::vector<IntVec> characters;
    for (const auto& c : collection) characters.push_back(stabilizer.project(c));
    if (!generates(stabilizer, characters)) return Representability{false, cone};
  }
  return Representability{};
}

LatticeIdeal refined_ideal(const LabelledQuiver& q, const std::vector<IntVec>& reduced_refinement, bool z_invertible) {
  const std::size_t na = q.num_arrows();
  const std::size_t nb = reduced_refinement.size();
  const std::size_t d = q.num_vertices() - 1;
  const IntMatrix div = q.division();
  const IntMatrix inc = q.incidence();
  const IntMatrix basis_columns = IntMatrix::from_columns(reduced_refinement, d);

  LatticeIdeal ideal;
  ideal.names = variable_names("y", na);
  for (auto& z : variable_names("z", nb)) ideal.names.push_back(z);
  ideal.invertible.assign(na, false);
  ideal.invertible.resize(na + nb, z_invertible);

  std::vector<IntVec> gens;
  const IntMatrix kernel = kernel_basis(div);
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    const IntVec w = kernel.row(k);
    auto v = solve_integer(basis_columns, scale(reduced(inc.apply(w)), -1));
    if (!v) fail_computation("InternalError", "refinement basis does not span inc(ker div)");
    IntVec row = w;
    row.insert(row.end(), v->begin(), v->end());
    gens.push_back(std::move(row));
  }
  ideal.lattice = Lattice(gens, na + nb);

  ideal.monomial_map = IntMatrix(q.label_rank + d, na + nb);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t i = 0; i < q.label_rank; ++i) ideal.monomial_map(i, a) = div(i, a);
    const IntVec w = reduced(q.incidence_of(a));
    for (std::size_t i = 0; i < d; ++i) ideal.monomial_map(q.label_rank + i, a) = w[i];
  }
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < d; ++i) ideal.monomial_map(q.label_rank + i, na + b) = reduced_refinement[b][i];
  return ideal;
}

LatticeIdeal image_ideal(const LabelledQuiver& q, const Lattice& r) { return refined_ideal(q, reduced_basis(r), true); }

LatticeIdeal forget_refinement(const LabelledQuiver& q) {
  const std::size_t na = q.num_arrows();
  const std::size_t d = q.num_vertices() - 1;
  LatticeIdeal ideal;
  ideal.names = variable_names("y", na);
  ideal.invertible.assign(na, false);
  ideal.monomial_map = IntMatrix(q.label_rank + d, na);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t i = 0; i < q.label_rank; ++i) ideal.monomial_map(i, a) = q.arrows[a].label[i];
    const IntVec w = reduced(q.incidence_of(a));
    for (std::size_t i = 0; i < d; ++i) ideal.monomial_map(q.label_rank + i, a) = w[i];
  }
  ideal.lattice = Lattice(kernel_basis(ideal.monomial_map).row_vectors(), na);
  return ideal;
}

}  // namespace stacklin
