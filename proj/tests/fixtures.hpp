#pragma once

#include <vector>

#include "addspec/additive_space.hpp"

namespace fixture {

using addspec::ExponentPair;
using addspec::Rational;

inline ExponentPair pt(std::int64_t a, std::int64_t b) { return {Rational(a), Rational(b)}; }

/// Corners of [1,3]^2 in zigzag order, without the closing point.
inline std::vector<ExponentPair> rectangle() {
  return {pt(1, 1), pt(1, 3), pt(3, 3), pt(3, 1)};
}

/// Eight-point staircase (1,1), (1,2), (2,2), ..., (4,5) in path order.
inline std::vector<ExponentPair> staircase() {
  std::vector<ExponentPair> out;
  for (int k = 1; k <= 4; ++k) {
    out.push_back(pt(k, k));
    out.push_back(pt(k, k + 1));
  }
  return out;
}

inline std::vector<addspec::AdditiveSpace> presets() {
  using addspec::AdditiveSpace;
  return {AdditiveSpace::l_space(), AdditiveSpace::plus_space(), AdditiveSpace::t_space(),
          AdditiveSpace::symmetric(Rational(-1, 3)), AdditiveSpace::symmetric(Rational(1))};
}

}  // namespace fixture
