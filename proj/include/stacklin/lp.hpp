#pragma once

#include <vector>

#include "stacklin/intlin.hpp"

namespace stacklin {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  RatVec solution;
};

// Exact two-phase simplex with Bland's rule:
//   minimize objective . x  subject to  constraints x = rhs, x >= 0.
LpResult minimize(const std::vector<RatVec>& constraints, const RatVec& rhs, const RatVec& objective);

bool feasible(const std::vector<RatVec>& constraints, const RatVec& rhs);

}  // namespace stacklin
