#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stacklin/errors.hpp"
#include "stacklin/linser.hpp"
#include "stacklin/mckay.hpp"
#include "stacklin/quiver.hpp"
#include "stacklin/toric.hpp"

namespace fixtures {

using namespace stacklin;

// Code of the Error thrown by f, or "" when it returns normally.
inline std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<IntVec> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(iv(r));
  return out;
}

inline StackyFan p112_fan() { return {2, ivs({{1, 0}, {-1, -2}, {0, 1}}), {{0, 1}, {1, 2}, {0, 2}}}; }
inline StackyFan p123_fan() { return {2, ivs({{-2, -3}, {1, 0}, {0, 1}}), {{0, 1}, {1, 2}, {0, 2}}}; }
inline StackyFan p2_fan() { return {2, ivs({{1, 0}, {0, 1}, {-1, -1}}), {{0, 1}, {1, 2}, {0, 2}}}; }
inline StackyFan football_fan() { return {1, ivs({{2}, {-2}}), {{0}, {1}}}; }

inline CoxSpace z2z2_cox() {
  AbelianGroup g(1, iv({2, 2}), IntMatrix(3, 0));
  return cox_space_from_data(g, ivs({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}),
                             {Support{1}, Support{2}, Support{4}, Support{8}});
}

// Line bundles O(k) on a space with Pic = Z.
inline std::vector<IntVec> twists(std::initializer_list<long> ks) {
  std::vector<IntVec> out;
  for (long k : ks) out.push_back(iv({k}));
  return out;
}

inline std::vector<IntVec> z2z2_collection() {
  return ivs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 0, 0}});
}
inline std::vector<IntVec> football_collection() { return ivs({{0, 0}, {2, 1}, {4, 0}}); }

struct SectionExample {
  CoxSpace x;
  std::vector<IntVec> collection;
  LabelledQuiver q;
};

inline SectionExample section_example(const StackyFan& fan, std::vector<IntVec> collection) {
  CoxSpace x = cox_space(fan);
  LabelledQuiver q = quiver_of_sections(x, collection);
  return {x, std::move(collection), std::move(q)};
}

// The three golden quivers of sections.
inline std::vector<SectionExample> section_examples() {
  return {section_example(p112_fan(), twists({0, 1, 2})), section_example(p112_fan(), twists({0, 1, 3})),
          section_example(p123_fan(), twists({0, 1, 2, 3}))};
}

inline AbelianAction cyclic(long order, std::initializer_list<long> weights) {
  AbelianAction a;
  a.invariant_factors = iv({order});
  for (long w : weights) a.weights.push_back(iv({w}));
  return a;
}

inline std::vector<AbelianAction> mckay_actions() {
  return {cyclic(2, {1, 1}), cyclic(3, {1, 2}), cyclic(3, {1, 1, 1}), cyclic(4, {1, 3}), cyclic(5, {1, 2})};
}

// A random weight in full vertex coordinates with entries in [-bound, bound].
inline IntVec random_weight(std::mt19937_64& rng, std::size_t vertices, long bound) {
  IntVec reduced_weight(vertices - 1);
  for (auto& x : reduced_weight) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return expand(reduced_weight);
}

}  // namespace fixtures
