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

#ifndef QWTELEPORT_WALK_HPP
#define QWTELEPORT_WALK_HPP

#include <map>
#include <span>
#include <vector>

#include "qwteleport/algebra.hpp"

namespace qwt {

/// Largest supported coin count (2^8 = 256 amplitudes per lattice site).
inline constexpr int kMaxCoins = 8;

/// An m-coin discrete-time walk on the integer line. Step n rotates coin n
/// and shifts the walker by +1 on that coin's R component, -1 on its L
/// component.
struct WalkConfig {
  std::vector<Mat2> coins;  // C_1 ... C_m, one per step

  int coin_count() const { return static_cast<int>(coins.size()); }
};

/// Throws std::invalid_argument if the coin count is out of [1, kMaxCoins]
/// or any coin fails the unitarity check at tol.
void validate_walk_config(const WalkConfig& config, double tol = 1e-10);

/// Sparse state: position -> dense block of 2^m amplitudes. Within a block,
/// bit k-1 of the index is coin k's component (0 = R, 1 = L).
struct WalkState {
  int coin_count = 0;
  std::map<int, std::vector<Complex>> amplitudes;

  double norm_squared() const;
  Complex amplitude(int position, int coin_config) const;
};

/// Product state: all mass at `position`, coin k in state coin_vectors[k-1].
/// Each coin vector must be unit norm (1e-10); m = coin_vectors.size().
WalkState initial_state(int position, std::span<const Vec2> coin_vectors);

/// One step acting on coin `slot` (1-based) with the given coin operator.
WalkState step(const WalkState& state, const Mat2& coin, int slot);

/// Step n of the configured walk: coin C_n on slot n. Throws if n is out of
/// [1, m].
WalkState step(const WalkConfig& config, const WalkState& state, int n);

/// Probability of finding the walker at each occupied position.
std::map<int, double> position_distribution(const WalkState& state);

}  // namespace qwt

#endif  // QWTELEPORT_WALK_HPP
