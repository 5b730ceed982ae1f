#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stacklin/intlin.hpp"
#include "stacklin/quiver.hpp"
#include "stacklin/support.hpp"

namespace stacklin {

enum class Status { unstable, strictly_semistable, stable };
std::string to_string(Status s);

// A torus acting on coordinates with the given weights, plus a block of
// invertible coordinates whose weights span `lineality`. Weights use reduced
// coordinates of dimension `dimension`.
class StabilityProblem {
 public:
  StabilityProblem(std::size_t dimension, std::vector<IntVec> variable_weights, std::vector<IntVec> lineality);

  // Variables are the arrows; when z is not invertible the basis elements
  // follow as extra variables (index num_arrows + b).
  static StabilityProblem refined(const LabelledQuiver& q, const std::vector<IntVec>& reduced_refinement,
                                  bool z_invertible);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t num_variables() const noexcept { return weights_.size(); }
  const std::vector<IntVec>& variable_weights() const noexcept { return weights_; }
  const std::vector<IntVec>& lineality() const noexcept { return lineality_; }

  // Exact cone criterion for a point whose nonzero coordinates are `support`.
  Status status(const RatVec& theta, Support support) const;

  // Variables grouped by identical weight, ordered by first occurrence.
  std::vector<Support> weight_classes() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<IntVec> weights_;
  std::vector<IntVec> lineality_;
};

inline constexpr std::size_t kMaxScanBits = 20;
inline constexpr std::size_t kMaxFiltrationVertices = 20;

// theta in full vertex coordinates.
Status git_status(const LabelledQuiver& q, const Lattice& r, const IntVec& theta, Support arrows, Support zs,
                  bool z_invertible);

// Filtrations by arrow-closed vertex sets with rational multiplicities on
// which every refinement functional vanishes (z invertible).
Status filtration_status(const LabelledQuiver& q, const Lattice& r, const IntVec& theta, Support arrows);

// No support is strictly semistable. `is_generic` scans every subset of
// distinct weights; `is_generic_on` only the listed supports.
bool is_generic(const StabilityProblem& p, const RatVec& theta);
bool is_generic_on(const StabilityProblem& p, const RatVec& theta, const std::vector<Support>& supports);
bool is_generic(const LabelledQuiver& q, const Lattice& r, const IntVec& theta);

std::vector<Support> maximal_unstable_supports(const StabilityProblem& p, const RatVec& theta);

}  // namespace stacklin
