#include <algorithm>
#include <deque>
#include <set>

#include "stacklin/binomial.hpp"
#include "stacklin/cone.hpp"
#include "stacklin/errors.hpp"
#include "stacklin/scan.hpp"

namespace stacklin {
namespace {

// Smallest face containing the generators in s: g_j lies in it exactly when
// -g_j is in cone(all) + span(generators in s).
Support closure(const std::vector<RatVec>& gens, std::size_t dim, Support s) {
  RationalCone c;
  c.dimension = dim;
  c.generators = gens;
  for (auto i : members(s)) c.lineality.push_back(gens[i]);
  Support out = s;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (contains(s, j)) continue;
    RatVec neg = gens[j];
    for (auto& x : neg) x = -x;
    if (in_cone(c, neg)) out |= Support{1} << j;
  }
  return out;
}

}  // namespace

std::vector<Support> orbit_faces(const IntMatrix& map) {
  const std::size_t n = map.cols();
  if (n > kMaxFaceGenerators) fail_computation("TooManyGenerators", "face enumeration limited to 24 generators");
  std::vector<RatVec> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back(to_rational(map.column(j)));
  std::set<Support> seen;
  std::deque<Support> queue;
  const Support bottom = closure(gens, map.rows(), 0);
  seen.insert(bottom);
  queue.push_back(bottom);
  while (!queue.empty()) {
    const Support f = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (contains(f, j)) continue;
      const Support g = closure(gens, map.rows(), f | (Support{1} << j));
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  std::vector<Support> faces(seen.begin(), seen.end());
  std::sort(faces.begin(), faces.end(), [](Support a, Support b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return faces;
}

std::size_t face_dimension(const IntMatrix& map, Support face) {
  std::vector<IntVec> cols;
  for (auto j : members(face)) cols.push_back(map.column(j));
  return rational_rank(cols, map.rows());
}

std::vector<Support> fixed_stable_points(const IntMatrix& map, const std::vector<Support>& faces,
                                         const StabilityProblem& p, const RatVec& theta) {
  if (map.cols() != p.num_variables()) fail_computation("DimensionMismatch", "monomial map and weights disagree");
  const auto statuses = scan_statuses(p, theta, faces);
  std::vector<Support> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (statuses[i] != Status::stable) continue;
    std::vector<IntVec> weights;
    for (auto j : members(faces[i])) weights.push_back(p.variable_weights()[j]);
    if (face_dimension(map, faces[i]) == rational_rank(weights, p.dimension())) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace stacklin
