#include "stacklin/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stacklin/errors.hpp"
#include "stacklin/lp.hpp"

namespace stacklin {

TermOrder::TermOrder(std::vector<Int> grading, std::vector<std::size_t> sequence)
    : grading_(std::move(grading)), sequence_(std::move(sequence)) {}

Int TermOrder::degree(const Exponent& a) const {
  Int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) d += grading_[i] * a[i];
  return d;
}

bool TermOrder::greater(const Exponent& a, const Exponent& b) const {
  const Int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (auto it = sequence_.rbegin(); it != sequence_.rend(); ++it)
    if (a[*it] != b[*it]) return a[*it] < b[*it];
  return false;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

// Orients x^a - x^b so the lead is larger; false when the binomial vanishes.
bool orient(Binomial& b, const TermOrder& order) {
  if (b.lead == b.trail) return false;
  if (order.greater(b.trail, b.lead)) std::swap(b.lead, b.trail);
  if (total_degree(b.lead) > kMaxBinomialDegree || total_degree(b.trail) > kMaxBinomialDegree)
    fail_computation("DegreeBlowup", "binomial degree exceeds 64");
  return true;
}

Exponent normal_form_in(const std::vector<Binomial>& g, Exponent m) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& b : g)
      if (divides(b.lead, m)) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += b.trail[i] - b.lead[i];
        changed = true;
        break;
      }
  }
  return m;
}

std::vector<Binomial> reduce_basis(std::vector<Binomial> g, const TermOrder& order) {
  std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) { return order.greater(b.lead, a.lead); });
  std::vector<Binomial> minimal;
  for (const auto& b : g)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Binomial& m) { return divides(m.lead, b.lead); }))
      minimal.push_back(b);
  for (auto& b : minimal) {
    std::vector<Binomial> others;
    for (const auto& o : minimal)
      if (&o != &b) others.push_back(o);
    b.trail = normal_form_in(others, b.trail);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<Binomial> buchberger(const std::vector<Binomial>& input, const TermOrder& order) {
  std::vector<Binomial> g;
  for (auto b : input) {
    b.lead = normal_form_in(g, b.lead);
    b.trail = normal_form_in(g, b.trail);
    if (orient(b, order)) g.push_back(std::move(b));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (coprime(g[i].lead, g[j].lead)) continue;
    const std::size_t n = g[i].lead.size();
    Binomial s{Exponent(n), Exponent(n)};
    for (std::size_t k = 0; k < n; ++k) {
      const long l = std::max(g[i].lead[k], g[j].lead[k]);
      s.lead[k] = l - g[i].lead[k] + g[i].trail[k];
      s.trail[k] = l - g[j].lead[k] + g[j].trail[k];
    }
    s.lead = normal_form_in(g, s.lead);
    s.trail = normal_form_in(g, s.trail);
    if (!orient(s, order)) continue;
    g.push_back(std::move(s));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return reduce_basis(std::move(g), order);
}

std::vector<Int> positive_grading(const LatticeIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  const auto basis = ideal.lattice.basis_vectors();
  // grading = 1 + s with s >= 0 and grading . l = 0 for every basis vector l.
  std::vector<RatVec> rows;
  RatVec rhs;
  for (const auto& l : basis) {
    RatVec row(n);
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = l[i];
      total += l[i];
    }
    rows.push_back(std::move(row));
    rhs.push_back(-total);
  }
  LpResult r = minimize(rows, rhs, RatVec(n));
  if (r.status != LpStatus::optimal)
    fail_computation("NotPositivelyGraded", "the lattice meets the nonnegative orthant");
  RatVec grading(n);
  for (std::size_t i = 0; i < n; ++i) grading[i] = r.solution[i] + 1;
  IntVec g = primitive_integer(grading);
  return std::vector<Int>(g.begin(), g.end());
}

}  // namespace

Exponent GroebnerBasis::normal_form(Exponent monomial) const { return normal_form_in(elements, std::move(monomial)); }

Binomial binomial_from_vector(const IntVec& v) {
  Binomial b{Exponent(v.size()), Exponent(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p() || abs(v[i]) > kMaxBinomialDegree) fail_computation("DegreeBlowup", "lattice vector entry too large");
    const long x = v[i].get_si();
    (x > 0 ? b.lead : b.trail)[i] = x > 0 ? x : -x;
  }
  return b;
}

GroebnerBasis saturate(const LatticeIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  if (ideal.invertible.size() != n) fail_computation("DimensionMismatch", "invertibility flags per variable");
  if (ideal.lattice.ambient() != n) fail_computation("DimensionMismatch", "lattice ambient differs from variables");
  const auto free_count = static_cast<std::size_t>(std::count(ideal.invertible.begin(), ideal.invertible.end(), false));
  if (free_count > kMaxSaturationVariables)
    fail_computation("TooManyVariables", "saturation limited to 16 non-invertible variables");

  const std::vector<Int> grading = positive_grading(ideal);
  std::vector<Binomial> current;
  for (const auto& l : ideal.lattice.basis_vectors()) current.push_back(binomial_from_vector(l));

  auto order_with_last = [&](std::size_t last) {
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < n; ++i)
      if (i != last) seq.push_back(i);
    seq.push_back(last);
    return TermOrder(grading, seq);
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (ideal.invertible[v]) continue;
    const TermOrder order = order_with_last(v);
    std::vector<Binomial> g = buchberger(current, order);
    for (auto& b : g) {
      const long k = std::min(b.lead[v], b.trail[v]);
      b.lead[v] -= k;
      b.trail[v] -= k;
    }
    current = std::move(g);
  }
  std::vector<std::size_t> natural(n);
  std::iota(natural.begin(), natural.end(), 0);
  TermOrder final_order(grading, natural);
  return GroebnerBasis{final_order, buchberger(current, final_order)};
}

std::vector<Binomial> minimal_generators(const GroebnerBasis& gb) {
  std::vector<Binomial> sorted = gb.elements;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Binomial& a, const Binomial& b) {
    return gb.order.degree(a.lead) < gb.order.degree(b.lead);
  });
  std::vector<Binomial> kept;
  for (const auto& b : sorted) {
    const auto partial = buchberger(kept, gb.order);
    if (normal_form_in(partial, b.lead) != normal_form_in(partial, b.trail)) kept.push_back(b);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Binomial> saturate_generators(const LatticeIdeal& ideal) { return minimal_generators(saturate(ideal)); }

std::string render_monomial(const Exponent& e, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out << (first ? "" : "*") << names[i];
    if (e[i] > 1) out << "^" << e[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

std::string render(const Binomial& b, const std::vector<std::string>& names) {
  return render_monomial(b.lead, names) + " - " + render_monomial(b.trail, names);
}

}  // namespace stacklin
