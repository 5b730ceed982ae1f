#pragma once

#include <cstddef>
#include <vector>

#include "stacklin/abelian_group.hpp"
#include "stacklin/binomial.hpp"
#include "stacklin/moduli.hpp"
#include "stacklin/quiver.hpp"
#include "stacklin/toric.hpp"

namespace stacklin {

// A finite abelian group acting diagonally on A^n, given through its
// character group Z/d_1 + ... + Z/d_t and the character of each coordinate.
struct AbelianAction {
  IntVec invariant_factors;     // d_1 | d_2 | ..., each at least 2
  std::vector<IntVec> weights;  // one vector of length t per coordinate
  bool require_sl = false;

  std::size_t dimension() const noexcept { return weights.size(); }
};

void validate(const AbelianAction& a);

// Characters in mixed-radix order (last factor fastest); index 0 is trivial.
std::vector<IntVec> group_elements(const AbelianAction& a);
std::size_t element_index(const AbelianAction& a, const IntVec& element);
AbelianGroup character_group(const AbelianAction& a);

// One vertex per character, and for every coordinate k (outer) and character
// rho (inner) an arrow rho -> rho + w_k labelled e_k.
LabelledQuiver mckay_quiver(const AbelianAction& a);
// Cox data of [A^n / G]: degrees are the weights and nothing is removed.
CoxSpace mckay_cox_space(const AbelianAction& a);

bool verify_r_equals_ker_pic(const AbelianAction& a);

// Elements -e_{rho_j} - e_{rho' - rho_j} + e_{rho'} for the cyclic generators
// rho_j, in reduced coordinates, nonzero and without repetition.
std::vector<IntVec> bbar(const AbelianAction& a);
// The lexicographically first subset of bbar that is a basis of R.
std::vector<IntVec> canonical_basis(const AbelianAction& a);

struct WallCrossReport {
  IntVec theta1;  // full coordinates
  IntVec theta2;
  std::vector<IntVec> basis;  // reduced coordinates
  bool z_all_nonzero_verified = false;
  AbelianGroup residual_group;
  std::vector<std::size_t> chart_arrows;
  std::size_t theta1_semistable_faces = 0;
  std::size_t theta2_semistable_faces = 0;
  std::vector<Support> hilb_fixed_points;  // arrow supports of torus-fixed stable points
  std::vector<Wall> walls;
};

WallCrossReport wall_cross(const AbelianAction& a);

struct MonomialCluster {
  std::vector<Exponent> staircase;   // sorted
  std::vector<Exponent> generators;  // outer corners, sorted
};

inline constexpr std::size_t kMaxClusterOrder = 60;
inline constexpr std::size_t kMaxClusterDimension = 3;

// Every G-invariant monomial ideal whose quotient has one monomial of each character.
std::vector<MonomialCluster> gcluster_oracle(const AbelianAction& a);

}  // namespace stacklin
