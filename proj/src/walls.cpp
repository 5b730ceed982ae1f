#include <algorithm>
#include <map>
#include <set>

#include "stacklin/errors.hpp"
#include "stacklin/moduli.hpp"
#include "stacklin/scan.hpp"

namespace stacklin {
namespace {

constexpr std::size_t kMaxHyperplaneSubsets = 500000;

IntVec sign_normalised(IntVec v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

// Hyperplanes spanned by weight vectors that contain the lineality space.
std::set<IntVec> candidate_normals(const StabilityProblem& p) {
  const std::size_t d = p.dimension();
  std::set<IntVec> normals;
  if (d == 0) return normals;
  if (d == 1) {
    normals.insert(IntVec{1});
    return normals;
  }
  std::set<IntVec> distinct(p.variable_weights().begin(), p.variable_weights().end());
  for (const auto& l : p.lineality()) distinct.insert(l);
  distinct.erase(IntVec(d));
  const std::vector<IntVec> vectors(distinct.begin(), distinct.end());
  const std::size_t k = d - 1;
  if (vectors.size() < k) return normals;

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::size_t visited = 0;
  for (;;) {
    if (++visited > kMaxHyperplaneSubsets) fail_computation("TooManyHyperplanes", "wall candidate enumeration too large");
    std::vector<IntVec> rows;
    for (auto i : pick) rows.push_back(vectors[i]);
    IntMatrix kernel = kernel_basis(IntMatrix::from_rows(rows, d));
    if (kernel.rows() == 1) {
      IntVec normal = sign_normalised(kernel.row(0));
      bool contains_lineality = std::all_of(p.lineality().begin(), p.lineality().end(),
                                            [&](const IntVec& l) { return dot(normal, l) == 0; });
      if (contains_lineality) normals.insert(normal);
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == vectors.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return normals;
}

Rat dot_rat(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec along(const RatVec& from, const RatVec& to, const Rat& t) {
  RatVec out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = from[i] + t * (to[i] - from[i]);
  return out;
}

}  // namespace

std::vector<Wall> wall_path(const StabilityProblem& p, const std::vector<Support>& supports, const RatVec& from,
                            const RatVec& to) {
  if (!is_generic_on(p, from, supports) || !is_generic_on(p, to, supports))
    fail_computation("EndpointOnWall", "an endpoint of the path is not generic");
  if (from == to) return {};

  std::map<Rat, std::vector<IntVec>> crossings;
  for (const auto& normal : candidate_normals(p)) {
    const Rat a = dot_rat(normal, from);
    const Rat b = dot_rat(normal, to);
    if ((a > 0 && b < 0) || (a < 0 && b > 0)) crossings[a / (a - b)].push_back(normal);
  }
  if (crossings.empty()) return {};

  std::vector<Rat> cuts{Rat(0)};
  for (const auto& [t, _] : crossings) cuts.push_back(t);
  cuts.push_back(Rat(1));
  std::vector<std::vector<Status>> signature;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat mid = (cuts[i] + cuts[i + 1]) / 2;
    signature.push_back(scan_statuses(p, along(from, to, mid), supports));
  }

  std::vector<Wall> walls;
  std::size_t i = 0;
  for (const auto& [t, normals] : crossings) {
    if (signature[i] != signature[i + 1]) walls.push_back(Wall{t, along(from, to, t), normals});
    ++i;
  }
  return walls;
}

}  // namespace stacklin
