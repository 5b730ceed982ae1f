#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stacklin/intlin.hpp"

namespace stacklin {

// Z^f + Z/d_1 + ... + Z/d_t with 2 <= d_1 | d_2 | ..., together with a
// surjection from some ambient Z^k. Elements are coordinate vectors of length
// f + t: free coordinates first, then torsion coordinates reduced into [0, d_i).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t free_rank, IntVec torsion, IntMatrix projection);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const IntVec& torsion() const noexcept { return torsion_; }
  std::size_t coordinates() const noexcept { return free_rank_ + torsion_.size(); }
  std::size_t ambient() const noexcept { return projection_.cols(); }
  const IntMatrix& projection() const noexcept { return projection_; }

  IntVec zero() const { return IntVec(coordinates()); }
  IntVec reduce(IntVec element) const;
  IntVec project(const IntVec& ambient_vector) const;
  IntVec image_of_basis(std::size_t i) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec subtract(const IntVec& a, const IntVec& b) const;
  IntVec negate(const IntVec& a) const;
  IntVec multiply(const IntVec& a, const Int& k) const;
  bool is_zero(const IntVec& element) const;
  bool equal(const IntVec& a, const IntVec& b) const { return is_zero(subtract(a, b)); }
  bool is_trivial() const noexcept { return coordinates() == 0; }
  bool isomorphic_to(const AbelianGroup& other) const;
  // Cardinality of a finite group; fails on groups with a free part.
  Int order() const;

  // Columns d_i e_{f+i}: the relations among coordinates.
  IntMatrix relations() const;
  std::optional<IntVec> preimage(const IntVec& element) const;
  // Same group, projection precomposed with `map` (ambient x new_ambient).
  AbelianGroup after(const IntMatrix& map) const;
  // Same group with the sign of one free coordinate reversed.
  AbelianGroup flip_free_coordinate(std::size_t i) const;
  // Checks that `element` has the right length and is reduced.
  bool is_element(const IntVec& element) const;

  std::string describe() const;

 private:
  std::size_t free_rank_ = 0;
  IntVec torsion_;
  IntMatrix projection_;
};

// Z^rows / im(a), with the quotient map as projection. The result depends only
// on the column lattice of a.
AbelianGroup cokernel_presentation(const IntMatrix& a);

// g / <elements>; the projection of the result is from g's coordinates.
AbelianGroup quotient_by(const AbelianGroup& g, const std::vector<IntVec>& elements);

bool generates(const AbelianGroup& g, const std::vector<IntVec>& elements);

// Kernel of Z^k -> g sending e_i to images[i].
Lattice kernel_of_map(const AbelianGroup& g, const std::vector<IntVec>& images);

}  // namespace stacklin
