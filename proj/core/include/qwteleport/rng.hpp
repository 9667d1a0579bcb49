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

#ifndef QWTELEPORT_RNG_HPP
#define QWTELEPORT_RNG_HPP

#include <cstdint>

namespace qwt {

/// Deterministic splitmix64 generator. Every randomized routine in this
/// library takes an explicit seed or an Rng, and all distributions (uniform,
/// Box-Muller gaussian) are produced in-house, so seeded runs are
/// byte-identical across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 bits of randomness.
  double uniform();

  /// Uniform angle in [0, 2*pi).
  double angle();

  /// Standard normal deviate (Box-Muller, cached spare).
  double gaussian();

  /// Derives an independent stream seed from (seed, lane). Harness trials use
  /// one lane each so results do not depend on evaluation order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t lane);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qwt

#endif  // QWTELEPORT_RNG_HPP
