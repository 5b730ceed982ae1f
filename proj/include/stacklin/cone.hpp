#pragma once

#include <cstddef>
#include <vector>

#include "stacklin/intlin.hpp"

namespace stacklin {

// cone(generators) + span(lineality) inside Q^dimension.
struct RationalCone {
  std::size_t dimension = 0;
  std::vector<RatVec> generators;
  std::vector<RatVec> lineality;
};

enum class ConeQuery { member, relative_interior, spans_ambient };

bool cone_query(const RationalCone& cone, const RatVec& point, ConeQuery mode);

inline bool in_cone(const RationalCone& c, const RatVec& p) { return cone_query(c, p, ConeQuery::member); }
inline bool in_relative_interior(const RationalCone& c, const RatVec& p) {
  return cone_query(c, p, ConeQuery::relative_interior);
}
bool spans_ambient(const RationalCone& c);
std::size_t cone_rank(const RationalCone& c);

}  // namespace stacklin
