// Copyright 2026 The qwteleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWTELEPORT_TESTS_TEST_SUPPORT_HPP
#define QWTELEPORT_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdlib>

#include "qwteleport/algebra.hpp"
#include "qwteleport/walk.hpp"

namespace qwt::testing {

inline bool complex_close(const Complex& a, const Complex& b, double tol) {
  return std::abs(a - b) <= tol;
}

inline double vec2_distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

inline double mat2_distance(const Mat2& a, const Mat2& b) { return frobenius_norm(a - b); }

inline double mat3_distance(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i) s += std::norm(a.e[i] - b.e[i]);
  return std::sqrt(s);
}

inline Vec2 random_unit_vec2(Rng& rng) {
  Vec2 v = {{Complex(rng.gaussian(), rng.gaussian()), Complex(rng.gaussian(), rng.gaussian())}};
  return Complex(1.0 / norm(v)) * v;
}

// a*s1 + b*s2 over the union of occupied positions.
inline WalkState combine_states(const Complex& a, const WalkState& s1, const Complex& b,
                                const WalkState& s2) {
  WalkState out;
  out.coin_count = s1.coin_count;
  const std::size_t block_size = std::size_t(1) << s1.coin_count;
  auto add = [&](const Complex& scale, const WalkState& s) {
    for (const auto& [pos, block] : s.amplitudes) {
      auto [it, inserted] = out.amplitudes.try_emplace(pos);
      if (inserted) it->second.assign(block_size, Complex(0.0));
      for (std::size_t i = 0; i < block_size; ++i) it->second[i] += scale * block[i];
    }
  };
  add(a, s1);
  add(b, s2);
  return out;
}

inline double state_distance(const WalkState& s1, const WalkState& s2) {
  const WalkState diff = combine_states(1.0, s1, -1.0, s2);
  return std::sqrt(diff.norm_squared());
}

}  // namespace qwt::testing

#endif  // QWTELEPORT_TESTS_TEST_SUPPORT_HPP
