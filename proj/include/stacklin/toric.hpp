#pragma once

#include <cstddef>
#include <vector>

#include "stacklin/abelian_group.hpp"
#include "stacklin/intlin.hpp"
#include "stacklin/support.hpp"

namespace stacklin {

// Rays are the images of the standard basis under the ray-marking map, so a
// ray may be a non-primitive vector.
struct StackyFan {
  std::size_t rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

struct CoxSpace {
  std::size_t num_vars = 0;
  AbelianGroup pic;                 // projection from Z^num_vars sends e_i to deg x_i
  std::vector<IntVec> degrees;      // reduced classes of the variables
  std::vector<Support> irrelevant;  // complements of the maximal cones
  bool complete = false;
  bool projective_asserted = false;

  std::vector<Support> maximal_cones() const;
  // A point with this set of nonzero coordinates avoids the irrelevant locus.
  bool is_semistable_support(Support nonzero) const;
};

void validate(const StackyFan& fan);
CoxSpace cox_space(const StackyFan& fan);
// Raw graded presentation: group structure, variable degrees and the supports
// of the irrelevant monomials.
CoxSpace cox_space_from_data(AbelianGroup pic, std::vector<IntVec> degrees, std::vector<Support> irrelevant);

inline constexpr std::size_t kMaxSectionBox = 1000000;

// Exponent vectors u >= 0 with deg(u) = cls, sorted descending lexicographically.
std::vector<IntVec> sections(const CoxSpace& x, const IntVec& cls);
bool is_basepoint_free(const CoxSpace& x, const IntVec& cls);

// Pic / <deg x_r : r not in cone>, with projection from Pic coordinates.
AbelianGroup stabilizer_at_cone(const CoxSpace& x, Support cone);
// Every face of every maximal cone, sorted and without repetition.
std::vector<Support> all_cones(const CoxSpace& x);

}  // namespace stacklin
