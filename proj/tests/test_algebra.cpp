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

#include "qwteleport/algebra.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "test_support.hpp"

using namespace qwt;
using namespace qwt::testing;

TEST_CASE("is_unitary: known cases") {
  CHECK(is_unitary(identity2(), 1e-10));
  CHECK(is_unitary(hadamard(), 1e-10));
  CHECK(is_unitary(pauli_x(), 1e-10));
  CHECK(is_unitary(identity3(), 1e-10));
  const Mat2 shear = {{Complex(1.0), Complex(1.0), Complex(0.0), Complex(1.0)}};
  CHECK_FALSE(is_unitary(shear, 1e-10));
}

TEST_CASE("proportional_unitary_scale: scalar multiple of identity") {
  const double k = 1.0 / (2.0 * std::numbers::sqrt2);
  const Mat2 m = Complex(k) * identity2();
  const auto scale = proportional_unitary_scale(m, 1e-10);
  REQUIRE(scale.has_value());
  CHECK(*scale == doctest::Approx(k).epsilon(1e-12));
}

TEST_CASE("proportional_unitary_scale: rejects non-proportional and zero") {
  // m^dagger m = [[2,1],[1,1]]: the off-diagonal 1 rules it out.
  const Mat2 m = {{Complex(1.0), Complex(1.0), Complex(1.0), Complex(0.0)}};
  CHECK_FALSE(proportional_unitary_scale(m, 1e-10).has_value());
  CHECK_FALSE(proportional_unitary_scale(Mat2{}, 1e-10).has_value());
}

TEST_CASE("proportional_unitary_scale: recovers the scale and a unitary factor") {
  Rng rng(101);
  for (int t = 0; t < 25; ++t) {
    const double k = 0.1 + 2.9 * rng.uniform();
    const Mat2 m = Complex(k) * haar_unitary2(rng);
    const auto scale = proportional_unitary_scale(m, 1e-9);
    REQUIRE(scale.has_value());
    CHECK(*scale == doctest::Approx(k).epsilon(1e-12));
    CHECK(is_unitary(Complex(1.0 / *scale) * m, 1e-10));
  }
  for (int t = 0; t < 25; ++t) {
    Mat2 g;
    for (auto& z : g.e) z = Complex(rng.gaussian(), rng.gaussian());
    CHECK_FALSE(proportional_unitary_scale(g, 1e-9).has_value());
  }
}

TEST_CASE("distance_up_to_phase: global phases vanish") {
  const Mat2 rotated = std::polar(1.0, std::numbers::pi / 3.0) * identity2();
  CHECK(distance_up_to_phase(identity2(), rotated) <= 1e-12);
  CHECK(distance_up_to_phase(hadamard(), hadamard()) <= 1e-12);
  CHECK(distance_up_to_phase(Mat2{}, Mat2{}) == 0.0);
}

TEST_CASE("distance_up_to_phase: X vs Z hits the trace-free branch") {
  // tr(Z^dagger X) = 0, so ||X - theta*Z||^2 = 4 for every phase.
  CHECK(distance_up_to_phase(pauli_x(), pauli_z()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("distance_up_to_phase: symmetric and zero exactly on phase multiples") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const Mat2 a = haar_unitary2(rng);
    const Mat2 b = haar_unitary2(rng);
    CHECK(distance_up_to_phase(a, b) ==
          doctest::Approx(distance_up_to_phase(b, a)).epsilon(1e-10));
    const Mat2 twisted = std::polar(1.0, rng.angle()) * a;
    CHECK(distance_up_to_phase(a, twisted) <= 1e-12);
  }
}

TEST_CASE("haar_unitary2: deterministic and unitary") {
  const Mat2 u = haar_unitary2(std::uint64_t{0});
  CHECK(is_unitary(u, 1e-10));
  const Mat2 again = haar_unitary2(std::uint64_t{0});
  for (std::size_t i = 0; i < 4; ++i) CHECK(u.e[i] == again.e[i]);
}

TEST_CASE("haar_unitary2: per-entry second moment is 1/2") {
  Rng rng(20260809);
  double sums[4] = {0.0, 0.0, 0.0, 0.0};
  const int n = 10000;
  for (int t = 0; t < n; ++t) {
    const Mat2 u = haar_unitary2(rng);
    for (std::size_t i = 0; i < 4; ++i) sums[i] += std::norm(u.e[i]);
  }
  for (double s : sums) CHECK(std::abs(s / n - 0.5) < 0.02);
}

TEST_CASE("haar_unitary3: unitary across seeds") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) CHECK(is_unitary(haar_unitary3(rng), 1e-10));
}

TEST_CASE("unitaries preserve vector norm") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Mat2 u = haar_unitary2(rng);
    const Vec2 v = {{Complex(rng.gaussian(), rng.gaussian()),
                     Complex(rng.gaussian(), rng.gaussian())}};
    CHECK(std::abs(norm(u * v) - norm(v)) <= 1e-12);
  }
}

TEST_CASE("inverse: inverts unitaries, throws on singular input") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const Mat2 u = haar_unitary2(rng);
    CHECK(mat2_distance(inverse(u) * u, identity2()) <= 1e-12);
  }
  const Mat2 singular = {{Complex(1.0), Complex(2.0), Complex(2.0), Complex(4.0)}};
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("is_finite flags NaN and infinity") {
  Vec2 v = ket_r();
  CHECK(is_finite(v));
  v[1] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_FALSE(is_finite(v));
  Mat2 m = identity2();
  m(0, 1) = Complex(0.0, std::numeric_limits<double>::infinity());
  CHECK_FALSE(is_finite(m));
  Mat3 m3 = identity3();
  CHECK(is_finite(m3));
  m3(2, 2) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  CHECK_FALSE(is_finite(m3));
}

TEST_CASE("rng: deterministic streams and derived lanes differ") {
  Rng a(99);
  Rng b(99);
  for (int t = 0; t < 10; ++t) CHECK(a.next_u64() == b.next_u64());
  CHECK(Rng::derive(42, 0) != Rng::derive(42, 1));
  CHECK(Rng::derive(42, 0) == Rng::derive(42, 0));
}
