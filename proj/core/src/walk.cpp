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

#include "qwteleport/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwt {

void validate_walk_config(const WalkConfig& config, double tol) {
  const int m = config.coin_count();
  if (m < 1 || m > kMaxCoins)
    throw std::invalid_argument("walk config: coin count must be in [1, " +
                                std::to_string(kMaxCoins) + "], got " + std::to_string(m));
  for (int n = 0; n < m; ++n)
    if (!is_unitary(config.coins[static_cast<std::size_t>(n)], tol))
      throw std::invalid_argument("walk config: coin " + std::to_string(n + 1) +
                                  " is not unitary");
}

double WalkState::norm_squared() const {
  double total = 0.0;
  for (const auto& [pos, block] : amplitudes)
    for (const Complex& z : block) total += std::norm(z);
  return total;
}

Complex WalkState::amplitude(int position, int coin_config) const {
  const auto it = amplitudes.find(position);
  if (it == amplitudes.end()) return 0.0;
  return it->second[static_cast<std::size_t>(coin_config)];
}

WalkState initial_state(int position, std::span<const Vec2> coin_vectors) {
  const int m = static_cast<int>(coin_vectors.size());
  if (m < 1 || m > kMaxCoins)
    throw std::invalid_argument("initial_state: coin count must be in [1, " +
                                std::to_string(kMaxCoins) + "]");
  for (int k = 0; k < m; ++k) {
    const Vec2& v = coin_vectors[static_cast<std::size_t>(k)];
    if (!is_finite(v) || std::abs(norm(v) - 1.0) > 1e-10)
      throw std::invalid_argument("initial_state: coin vector " + std::to_string(k + 1) +
                                  " is not unit norm");
  }
  WalkState state;
  state.coin_count = m;
  std::vector<Complex> block(std::size_t(1) << m);
  for (std::size_t config = 0; config < block.size(); ++config) {
    Complex amp = 1.0;
    for (int k = 0; k < m; ++k) amp *= coin_vectors[static_cast<std::size_t>(k)][(config >> k) & 1];
    block[config] = amp;
  }
  state.amplitudes.emplace(position, std::move(block));
  return state;
}

WalkState step(const WalkState& state, const Mat2& coin, int slot) {
  if (slot < 1 || slot > state.coin_count)
    throw std::invalid_argument("step: slot " + std::to_string(slot) + " out of range [1, " +
                                std::to_string(state.coin_count) + "]");
  const std::size_t bit = std::size_t(1) << (slot - 1);
  const std::size_t block_size = std::size_t(1) << state.coin_count;

  WalkState next;
  next.coin_count = state.coin_count;
  auto block_at = [&](int pos) -> std::vector<Complex>& {
    auto [it, inserted] = next.amplitudes.try_emplace(pos);
    if (inserted) it->second.assign(block_size, Complex(0.0));
    return it->second;
  };

  for (const auto& [pos, block] : state.amplitudes) {
    std::vector<Complex>& right = block_at(pos + 1);
    std::vector<Complex>& left = block_at(pos - 1);
    for (std::size_t config = 0; config < block_size; ++config) {
      if (config & bit) continue;  // handle each R/L pair once
      const Complex amp_r = block[config];
      const Complex amp_l = block[config | bit];
      // Coin rotation on this slot, then the conditional shift.
      right[config] += coin(0, 0) * amp_r + coin(0, 1) * amp_l;
      left[config | bit] += coin(1, 0) * amp_r + coin(1, 1) * amp_l;
    }
  }
  return next;
}

WalkState step(const WalkConfig& config, const WalkState& state, int n) {
  if (n < 1 || n > config.coin_count())
    throw std::invalid_argument("step: step index " + std::to_string(n) + " out of range [1, " +
                                std::to_string(config.coin_count()) + "]");
  return step(state, config.coins[static_cast<std::size_t>(n - 1)], n);
}

std::map<int, double> position_distribution(const WalkState& state) {
  std::map<int, double> dist;
  for (const auto& [pos, block] : state.amplitudes) {
    double p = 0.0;
    for (const Complex& z : block) p += std::norm(z);
    dist[pos] = p;
  }
  return dist;
}

}  // namespace qwt
