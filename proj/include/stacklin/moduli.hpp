#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacklin/abelian_group.hpp"
#include "stacklin/quiver.hpp"
#include "stacklin/stability.hpp"

namespace stacklin {

// Toric presentation of the moduli stack of refined representations:
// the torus quotient of (A^{Q1} minus the unstable locus) by Wt(Q)/R.
struct ModuliPresentation {
  AbelianGroup gamma;                  // Wt(Q)/R; projection from reduced weight coordinates
  std::vector<IntVec> arrow_weights;   // class of inc(e_a) in gamma
  IntVec theta_class;
  std::vector<Support> unstable_supports;  // maximal unstable arrow supports
  IntVec theta_delta;                      // full coordinates
  std::vector<IntVec> tautological;        // full coordinates: 0 and e_i - e_0
  std::optional<std::vector<Int>> weighted_projective;

  // "P(1,1,2)" when recognised, otherwise empty.
  std::string recognised() const;
};

ModuliPresentation moduli_presentation(const LabelledQuiver& q, const Lattice& r, const IntVec& theta);
// Same, with any basis of R in reduced coordinates.
ModuliPresentation moduli_presentation(const LabelledQuiver& q, const std::vector<IntVec>& reduced_refinement,
                                       const IntVec& theta);

// Minimal exponents u with inc(u) = m theta modulo R, for the least m whose
// minimal supports cut out the same unstable supports as the cone criterion.
struct UnstableIdealDisplay {
  int multiple = 0;
  std::vector<IntVec> y_exponents;
  std::vector<IntVec> z_exponents;  // coefficients on the refinement basis
  std::vector<Support> minimal_supports;
};

UnstableIdealDisplay unstable_ideal_display(const LabelledQuiver& q, const Lattice& r, const IntVec& theta,
                                            int max_multiple = 4);

struct Wall {
  Rat parameter;                 // position along the segment, in (0, 1)
  RatVec theta;                  // reduced coordinates
  std::vector<IntVec> normals;   // primitive normals of the hyperplanes met there
};

// Walls met by the segment between two generic weights (reduced
// coordinates), judged on the listed supports; sorted by parameter.
std::vector<Wall> wall_path(const StabilityProblem& p, const std::vector<Support>& supports, const RatVec& from,
                            const RatVec& to);

}  // namespace stacklin
