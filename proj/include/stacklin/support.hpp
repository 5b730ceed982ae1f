#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stacklin {

// A set of coordinate indices (arrows, variables, vertices) as a bitmask.
using Support = std::uint64_t;

inline constexpr std::size_t kMaxSupportBits = 64;

inline constexpr bool contains(Support s, std::size_t i) { return (s >> i) & 1U; }
inline constexpr bool is_subset(Support a, Support b) { return (a & ~b) == 0; }
inline constexpr Support full_support(std::size_t n) {
  return n >= 64 ? ~Support{0} : (Support{1} << n) - 1;
}
inline std::size_t popcount(Support s) { return static_cast<std::size_t>(std::popcount(s)); }

inline Support support_of(const std::vector<std::size_t>& indices) {
  Support s = 0;
  for (auto i : indices) s |= Support{1} << i;
  return s;
}

inline std::vector<std::size_t> members(Support s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

}  // namespace stacklin
