#pragma once

#include <vector>

#include "stacklin/stability.hpp"

namespace stacklin {

// Status of every listed support. The parallel kernel splits the list across
// OpenMP threads; each slot is written by exactly one iteration, so the output
// does not depend on scheduling. The serial kernel is the reference.
std::vector<Status> scan_statuses(const StabilityProblem& p, const RatVec& theta, const std::vector<Support>& supports);
std::vector<Status> scan_statuses_serial(const StabilityProblem& p, const RatVec& theta,
                                         const std::vector<Support>& supports);

// Every subset of the given groups, as unions of their members, in mask order.
std::vector<Support> subsets_of_classes(const std::vector<Support>& classes);

}  // namespace stacklin
