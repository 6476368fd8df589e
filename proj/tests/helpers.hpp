#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>

#include "tlh/algebra.hpp"
#include "tlh/diagram.hpp"
#include "tlh/tangle.hpp"

namespace test {

// Fixed seed so failures reproduce; override per test where useful.
inline constexpr std::uint64_t kSeed = 20240601;

inline tlh::DecoratedTangle tangle(int m, std::initializer_list<std::tuple<const char*, const char*, int>> arcs,
                                   std::initializer_list<int> loops = {}) {
  tlh::DecoratedTangle t(m, m);
  for (const auto& [a, b, d] : arcs) t.connect(tlh::NodeRef::parse(a), tlh::NodeRef::parse(b), d);
  for (int l : loops) t.add_loop(l);
  return t;
}

inline tlh::Element U(int i, int m) { return tlh::Element::basis(tlh::generator_U(i, m)); }

inline tlh::HalfDiagram half(int points, std::initializer_list<tlh::HalfDiagram::Pair> pairs) {
  return tlh::HalfDiagram::from_pairs(points, pairs);
}

}  // namespace test
