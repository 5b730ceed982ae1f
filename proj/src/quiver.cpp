#include "stacklin/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "stacklin/errors.hpp"

namespace stacklin {

IntMatrix LabelledQuiver::incidence() const {
  IntMatrix m(num_vertices(), num_arrows());
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    m(arrows[a].head, a) += 1;
    m(arrows[a].tail, a) -= 1;
  }
  return m;
}

IntMatrix LabelledQuiver::division() const {
  IntMatrix m(label_rank, num_arrows());
  for (std::size_t a = 0; a < arrows.size(); ++a)
    for (std::size_t i = 0; i < label_rank; ++i) m(i, a) = arrows[a].label[i];
  return m;
}

IntVec LabelledQuiver::incidence_of(std::size_t arrow) const {
  IntVec v(num_vertices());
  v[arrows[arrow].head] += 1;
  v[arrows[arrow].tail] -= 1;
  return v;
}

namespace {

bool connected(std::size_t n, const std::vector<Arrow>& arrows) {
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& a : arrows) parent[find(a.tail)] = find(a.head);
  const std::size_t root = find(0);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

}  // namespace

void validate(const LabelledQuiver& q) {
  if (q.vertices.empty()) fail_validation("EmptyQuiver", "vertices", "a quiver needs at least one vertex");
  if (!is_zero(q.vertices[0])) fail_validation("ConventionViolated", "vertices[0]", "vertex 0 must carry the trivial class");
  if (q.num_arrows() > kMaxSupportBits) fail_validation("TooManyArrows", "arrows", "at most 64 arrows are supported");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::string field = "arrows[" + std::to_string(a) + "]";
    const auto& arrow = q.arrows[a];
    if (arrow.tail >= q.num_vertices() || arrow.head >= q.num_vertices())
      fail_validation("BadIndex", field, "vertex index out of range");
    if (arrow.label.size() != q.label_rank) fail_validation("DimensionMismatch", field + ".label", "label length differs");
    for (const auto& x : arrow.label)
      if (x < 0) fail_validation("IneffectiveLabel", field + ".label", "labels must be componentwise nonnegative");
  }
  if (!connected(q.num_vertices(), q.arrows)) fail_validation("Disconnected", "arrows", "the quiver is not connected");
}

IntVec reduced(const IntVec& full) { return IntVec(full.begin() + (full.empty() ? 0 : 1), full.end()); }

IntVec expand(const IntVec& reduced_weight) {
  IntVec full(reduced_weight.size() + 1);
  for (std::size_t i = 0; i < reduced_weight.size(); ++i) {
    full[i + 1] = reduced_weight[i];
    full[0] -= reduced_weight[i];
  }
  return full;
}

RatVec reduced(const RatVec& full) { return RatVec(full.begin() + (full.empty() ? 0 : 1), full.end()); }

RatVec expand(const RatVec& reduced_weight) {
  RatVec full(reduced_weight.size() + 1);
  for (std::size_t i = 0; i < reduced_weight.size(); ++i) {
    full[i + 1] = reduced_weight[i];
    full[0] -= reduced_weight[i];
  }
  return full;
}

void validate_weight(const IntVec& theta, std::size_t vertices) {
  if (theta.size() != vertices)
    fail_validation("DimensionMismatch", "theta", "expected " + std::to_string(vertices) + " entries");
  Int s = 0;
  for (const auto& x : theta) s += x;
  if (s != 0) fail_validation("NotAWeight", "theta", "entries must sum to zero");
}

LabelledQuiver quiver_of_sections(const CoxSpace& x, const std::vector<IntVec>& collection) {
  const std::size_t r = collection.size();
  if (r == 0) fail_validation("EmptyCollection", "collection", "at least one class is required");
  std::vector<IntVec> classes;
  for (std::size_t i = 0; i < r; ++i) {
    if (collection[i].size() != x.pic.coordinates())
      fail_validation("DimensionMismatch", "collection[" + std::to_string(i) + "]",
                      "expected " + std::to_string(x.pic.coordinates()) + " Pic coordinates");
    classes.push_back(x.pic.reduce(collection[i]));
  }
  if (!x.pic.is_zero(classes[0]))
    fail_validation("ConventionViolated", "collection[0]", "the first class must be the trivial class");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (classes[i] == classes[j])
        fail_validation("RepeatedClass", "collection[" + std::to_string(j) + "]", "classes must be distinct");

  std::vector<std::vector<std::set<IntVec>>> sec(r, std::vector<std::set<IntVec>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) {
        auto s = sections(x, x.pic.subtract(classes[j], classes[i]));
        sec[i][j].insert(s.begin(), s.end());
      }

  struct Keyed {
    IntVec cls;
    Arrow arrow;
  };
  std::vector<Keyed> found;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      for (const auto& s : sec[i][j]) {
        bool reducible = false;
        for (std::size_t k = 0; k < r && !reducible; ++k) {
          if (k == i || k == j) continue;
          for (const auto& first : sec[i][k]) {
            IntVec rest = subtract(s, first);
            if (std::any_of(rest.begin(), rest.end(), [](const Int& e) { return e < 0; })) continue;
            if (sec[k][j].count(rest)) {
              reducible = true;
              break;
            }
          }
        }
        if (!reducible) found.push_back({x.pic.subtract(classes[j], classes[i]), Arrow{i, j, s}});
      }
    }

  std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.cls, a.arrow.tail, a.arrow.head, b.arrow.label) <
           std::tie(b.cls, b.arrow.tail, b.arrow.head, a.arrow.label);
  });

  LabelledQuiver q;
  q.vertices = classes;
  q.label_rank = x.num_vars;
  for (auto& k : found) q.arrows.push_back(std::move(k.arrow));
  if (!connected(q.num_vertices(), q.arrows))
    fail_computation("Disconnected", "the quiver of sections is not connected");
  return q;
}

Lattice refinement_lattice(const LabelledQuiver& q) {
  const IntMatrix kernel = kernel_basis(q.division());
  const IntMatrix inc = q.incidence();
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < kernel.rows(); ++i) gens.push_back(inc.apply(kernel.row(i)));
  return Lattice(gens, q.num_vertices());
}

std::vector<IntVec> reduced_basis(const Lattice& r) {
  std::vector<IntVec> out;
  for (const auto& v : r.basis_vectors()) out.push_back(reduced(v));
  return out;
}

PicKernel pic_kernel(const LabelledQuiver& q, const AbelianGroup& group) {
  std::vector<IntVec> images(q.vertices.begin() + 1, q.vertices.end());
  Lattice in_reduced = kernel_of_map(group, images);
  std::vector<IntVec> gens;
  for (const auto& v : in_reduced.basis_vectors()) gens.push_back(expand(v));
  Lattice integral(gens, q.num_vertices());
  return {integral, integral.saturation()};
}

IntVec pic_of_weight(const LabelledQuiver& q, const AbelianGroup& group, const IntVec& theta) {
  IntVec total = group.zero();
  for (std::size_t i = 0; i < q.num_vertices(); ++i) total = add(total, scale(q.vertices[i], theta[i]));
  return group.reduce(total);
}

}  // namespace stacklin
