#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stacklin/intlin.hpp"
#include "stacklin/stability.hpp"
#include "stacklin/support.hpp"

namespace stacklin {

using Exponent = std::vector<long>;

// x^lead - x^trail
struct Binomial {
  Exponent lead;
  Exponent trail;
  bool operator==(const Binomial&) const = default;
  auto operator<=>(const Binomial&) const = default;
};

// The ideal of all x^{l+} - x^{l-} for l in `lattice`, in a ring where the
// flagged variables are units. `monomial_map` (optional, columns phi(e_v))
// parametrizes the torus orbit when the lattice is its kernel.
struct LatticeIdeal {
  std::vector<std::string> names;
  std::vector<bool> invertible;
  Lattice lattice;
  IntMatrix monomial_map;

  std::size_t num_vars() const noexcept { return names.size(); }
};

// Weighted degree by a positive grading vanishing on the lattice, ties broken
// reverse lexicographically with `sequence.back()` the cheapest variable.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::vector<Int> grading, std::vector<std::size_t> sequence);
  bool greater(const Exponent& a, const Exponent& b) const;
  Int degree(const Exponent& a) const;
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }

 private:
  std::vector<Int> grading_;
  std::vector<std::size_t> sequence_;
};

struct GroebnerBasis {
  TermOrder order;
  std::vector<Binomial> elements;  // reduced, sorted

  Exponent normal_form(Exponent monomial) const;
  bool contains(const Binomial& b) const { return normal_form(b.lead) == normal_form(b.trail); }
};

inline constexpr std::size_t kMaxSaturationVariables = 16;
inline constexpr long kMaxBinomialDegree = 64;

// Reduced Gröbner basis of the lattice ideal, via binomial Buchberger and
// saturation at each non-invertible variable.
GroebnerBasis saturate(const LatticeIdeal& ideal);
// Generators chosen degree by degree from a Gröbner basis, dropping redundant ones.
std::vector<Binomial> minimal_generators(const GroebnerBasis& gb);
std::vector<Binomial> saturate_generators(const LatticeIdeal& ideal);

Binomial binomial_from_vector(const IntVec& v);
std::string render(const Binomial& b, const std::vector<std::string>& names);
std::string render_monomial(const Exponent& e, const std::vector<std::string>& names);

inline constexpr std::size_t kMaxFaceGenerators = 24;

// Faces of cone(columns of map), each as the set of generators it contains;
// these are the supports of the torus orbits of the affine toric variety.
std::vector<Support> orbit_faces(const IntMatrix& map);
std::size_t face_dimension(const IntMatrix& map, Support face);

// Faces that are theta-stable and on which the acting torus has an open orbit
// of the full face dimension: the torus-fixed points of the quotient.
std::vector<Support> fixed_stable_points(const IntMatrix& map, const std::vector<Support>& faces,
                                         const StabilityProblem& p, const RatVec& theta);

}  // namespace stacklin
