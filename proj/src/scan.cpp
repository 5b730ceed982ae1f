#include "stacklin/scan.hpp"

#include <cstddef>

#include "stacklin/errors.hpp"

namespace stacklin {

std::vector<Status> scan_statuses(const StabilityProblem& p, const RatVec& theta, const std::vector<Support>& supports) {
  if (theta.size() != p.dimension()) fail_computation("DimensionMismatch", "weight of wrong length");
  std::vector<Status> out(supports.size(), Status::unstable);
  const auto n = static_cast<long>(supports.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = p.status(theta, supports[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<Status> scan_statuses_serial(const StabilityProblem& p, const RatVec& theta,
                                         const std::vector<Support>& supports) {
  std::vector<Status> out;
  out.reserve(supports.size());
  for (auto s : supports) out.push_back(p.status(theta, s));
  return out;
}

std::vector<Support> subsets_of_classes(const std::vector<Support>& classes) {
  const std::size_t k = classes.size();
  std::vector<Support> out(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < out.size(); ++mask) {
    Support s = 0;
    for (std::size_t c = 0; c < k; ++c)
      if ((mask >> c) & 1U) s |= classes[c];
    out[mask] = s;
  }
  return out;
}

}  // namespace stacklin
