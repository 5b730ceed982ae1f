#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stacklin/binomial.hpp"
#include "stacklin/quiver.hpp"
#include "stacklin/toric.hpp"

namespace stacklin {

// One exponent vector per arrow: the coordinate functions of the map to the
// moduli stack.
std::vector<IntVec> psi_map(const LabelledQuiver& q);
std::string render_monomial(const IntVec& exponents, const std::vector<std::string>& names);
std::vector<std::string> variable_names(const std::string& stem, std::size_t n);

struct MorphismCheck {
  bool morphism = true;
  std::optional<Support> witness;  // Cox-semistable support sent to the unstable locus
};

inline constexpr std::size_t kMaxMorphismVariables = 20;

// For every support T of the Cox space: if the arrows whose labels are
// supported in T form an unstable support, T must itself be Cox-unstable.
MorphismCheck is_morphism(const CoxSpace& x, const LabelledQuiver& q, const IntVec& theta);
MorphismCheck is_morphism_serial(const CoxSpace& x, const LabelledQuiver& q, const IntVec& theta);

struct BpfCertificate {
  std::size_t rank_collection = 0;
  std::size_t rank_bpf = 0;
  std::vector<std::pair<std::size_t, std::size_t>> bpf_pairs;  // (i, j): L_j - L_i is base-point free
  bool conclusive = false;
  std::optional<IntVec> theta;  // generic weight in the bpf cone for which psi is a morphism
  std::size_t attempts = 0;
};

inline constexpr std::size_t kMaxCertificateAttempts = 1000;

BpfCertificate bpf_certificate(const CoxSpace& x, const std::vector<IntVec>& collection, const LabelledQuiver& q);

// Sum of e_i - e_0 over the non-trivial vertices.
IntVec default_theta(const LabelledQuiver& q);

struct Representability {
  bool representable = true;
  std::optional<Support> failing_cone;
};

Representability is_representable(const CoxSpace& x, const std::vector<IntVec>& collection);

// Lattice ideal in k[y, z^{+-1}] of the image: pairs (w, v) with div w = 0 and
// inc w + iota(v) = 0. The refinement basis is given in reduced coordinates.
LatticeIdeal refined_ideal(const LabelledQuiver& q, const std::vector<IntVec>& reduced_refinement, bool z_invertible);
LatticeIdeal image_ideal(const LabelledQuiver& q, const Lattice& r);
// The same construction without the refinement: ker div meet ker inc on y only.
LatticeIdeal forget_refinement(const LabelledQuiver& q);

}  // namespace stacklin
