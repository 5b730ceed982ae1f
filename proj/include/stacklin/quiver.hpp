#pragma once

#include <cstddef>
#include <vector>

#include "stacklin/abelian_group.hpp"
#include "stacklin/intlin.hpp"
#include "stacklin/toric.hpp"

namespace stacklin {

struct Arrow {
  std::size_t tail = 0;
  std::size_t head = 0;
  IntVec label;  // exponent vector of the torus-invariant divisor
};

// Vertices carry classes in some group (Pic, or the character group of a
// finite abelian action); vertex 0 carries the trivial class.
struct LabelledQuiver {
  std::vector<IntVec> vertices;
  std::vector<Arrow> arrows;
  std::size_t label_rank = 0;

  std::size_t num_vertices() const noexcept { return vertices.size(); }
  std::size_t num_arrows() const noexcept { return arrows.size(); }
  IntMatrix incidence() const;  // |Q0| x |Q1|, column a is e_head - e_tail
  IntMatrix division() const;   // label_rank x |Q1|, column a is the label
  IntVec incidence_of(std::size_t arrow) const;
};

void validate(const LabelledQuiver& q);

// Weights live in {theta in Z^{Q0} : sum theta = 0}; "reduced" coordinates drop
// vertex 0, i.e. use the basis e_i - e_0.
IntVec reduced(const IntVec& full);
IntVec expand(const IntVec& reduced_weight);
RatVec reduced(const RatVec& full);
RatVec expand(const RatVec& reduced_weight);
void validate_weight(const IntVec& theta, std::size_t vertices);

LabelledQuiver quiver_of_sections(const CoxSpace& x, const std::vector<IntVec>& collection);

// Hermite basis of inc(ker div), in full vertex coordinates.
Lattice refinement_lattice(const LabelledQuiver& q);

// Refinement basis in reduced coordinates (rows).
std::vector<IntVec> reduced_basis(const Lattice& r);

// Kernel of Wt(Q) -> group, e_i - e_0 |-> class of vertex i, in full coordinates.
struct PicKernel {
  Lattice integral;
  Lattice rational;  // saturation of the integral kernel
};
PicKernel pic_kernel(const LabelledQuiver& q, const AbelianGroup& group);
IntVec pic_of_weight(const LabelledQuiver& q, const AbelianGroup& group, const IntVec& theta);

}  // namespace stacklin
