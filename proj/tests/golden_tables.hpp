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

// Frozen per-outcome correction tables for the three reference procedures,
// in canonical outcome order (2,R), (0,R), (-2,R), (2,L), (0,L), (-2,L).
// Expected normalized V, correction U, and outcome probabilities; V and U
// comparisons are up-to-global-phase.

#ifndef QWTELEPORT_TESTS_GOLDEN_TABLES_HPP
#define QWTELEPORT_TESTS_GOLDEN_TABLES_HPP

#include <array>
#include <numbers>

#include "qwteleport/teleport.hpp"

namespace qwt::testing {

struct GoldenTable {
  Procedure procedure;
  std::array<Mat2, 6> v;
  std::array<Mat2, 6> u;
  std::array<double, 6> probability;
};

inline Mat2 mat2_of(Complex a, Complex b, Complex c, Complex d) { return {{a, b, c, d}}; }

inline Mat3 mat3_of(std::array<Complex, 9> entries) { return {entries}; }

// Reference procedure 1: psi = |R>, c1 = I, c2 = h1 = Hadamard, h2_tilde =
// Hadamard mixing |2> and |-2> with identity on |0>. Corrections are the
// Pauli set {I, X, Z, Z, ZX, I}.
inline GoldenTable golden_example1() {
  const double s = 1.0 / std::numbers::sqrt2;
  GoldenTable g;
  g.procedure.psi = ket_r();
  g.procedure.c1 = identity2();
  g.procedure.c2 = hadamard();
  g.procedure.h1 = hadamard();
  g.procedure.h2_tilde = mat3_of({Complex(s), 0.0, Complex(s),  //
                                  0.0, 1.0, 0.0,                //
                                  Complex(s), 0.0, Complex(-s)});
  const Mat2 xz = pauli_x() * pauli_z();
  const Mat2 zx = pauli_z() * pauli_x();
  g.v = {identity2(), pauli_x(), pauli_z(), pauli_z(), xz, identity2()};
  g.u = {identity2(), pauli_x(), pauli_z(), pauli_z(), zx, identity2()};
  g.probability = {0.125, 0.25, 0.125, 0.125, 0.25, 0.125};
  return g;
}

// Reference procedure 2: psi = (|R>+|L>)/sqrt(2), c1 = c2 = I, h1 =
// Hadamard, balanced-modulus h2_tilde (every entry 1/sqrt(3)). All six
// outcomes are uniform at 1/6.
inline GoldenTable golden_example2() {
  const double s2 = 1.0 / std::numbers::sqrt2;
  const double s3 = 1.0 / std::numbers::sqrt3;
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex w2 = std::polar(1.0, 4.0 * std::numbers::pi / 3.0);

  GoldenTable g;
  g.procedure.psi = {{Complex(s2), Complex(s2)}};
  g.procedure.c1 = identity2();
  g.procedure.c2 = identity2();
  g.procedure.h1 = hadamard();
  // Stored in basis order (2, 0, -2) for rows and columns.
  g.procedure.h2_tilde = mat3_of({s3 * w2, Complex(s3), s3 * w,       //
                                  Complex(s3), Complex(s3), Complex(s3),  //
                                  -s3 * w, Complex(-s3), -s3 * w2});

  g.v = {mat2_of(s2 * w, s2, s2, -s2 * w2),   //
         mat2_of(s2, s2, s2, -s2),            //
         mat2_of(s2 * w2, s2, s2, -s2 * w),   //
         mat2_of(s2 * w, -s2, s2, s2 * w2),   //
         mat2_of(s2, -s2, s2, s2),            //
         mat2_of(s2 * w2, -s2, s2, s2 * w)};
  g.u = {mat2_of(s2 * w2, s2, s2, -s2 * w),   //
         mat2_of(s2, s2, s2, -s2),            //
         mat2_of(s2 * w, s2, s2, -s2 * w2),   //
         mat2_of(s2 * w2, s2, -s2, s2 * w),   //
         mat2_of(s2, s2, -s2, s2),            //
         mat2_of(s2 * w, s2, -s2, s2 * w2)};
  const double sixth = 1.0 / 6.0;
  g.probability = {sixth, sixth, sixth, sixth, sixth, sixth};
  return g;
}

// Reference procedure 3: psi = (|R>+i|L>)/sqrt(2), c1 = c2 = I, h1 =
// Hadamard, phase-antisymmetric h2_tilde with a vanishing middle entry.
inline GoldenTable golden_example3() {
  const double s2 = 1.0 / std::numbers::sqrt2;
  const double s3 = 1.0 / std::numbers::sqrt3;
  const double r23 = std::numbers::sqrt2 / std::numbers::sqrt3;  // sqrt(2/3)
  const Complex i(0.0, 1.0);

  GoldenTable g;
  g.procedure.psi = {{Complex(s2), s2 * i}};
  g.procedure.c1 = identity2();
  g.procedure.c2 = identity2();
  g.procedure.h1 = hadamard();
  // Stored in basis order (2, 0, -2) for rows and columns.
  g.procedure.h2_tilde = mat3_of({-0.5 * i, Complex(-s2), 0.5 * i,  //
                                  Complex(s2), 0.0, Complex(s2),    //
                                  -0.5 * i, Complex(s2), 0.5 * i});

  g.v = {mat2_of(s3 * i, r23, r23 * i, -s3),    //
         mat2_of(-1.0, 0.0, 0.0, i),            //
         mat2_of(-s3 * i, r23, r23 * i, s3),    //
         mat2_of(s3 * i, -r23, r23 * i, s3),    //
         mat2_of(-1.0, 0.0, 0.0, -i),           //
         mat2_of(-s3 * i, -r23, r23 * i, -s3)};
  g.u = {mat2_of(-s3 * i, -r23 * i, r23, -s3),  //
         mat2_of(-1.0, 0.0, 0.0, -i),           //
         mat2_of(s3 * i, -r23 * i, r23, s3),    //
         mat2_of(-s3 * i, -r23 * i, -r23, s3),  //
         mat2_of(-1.0, 0.0, 0.0, i),            //
         mat2_of(s3 * i, -r23 * i, -r23, -s3)};
  g.probability = {0.1875, 0.125, 0.1875, 0.1875, 0.125, 0.1875};
  return g;
}

}  // namespace qwt::testing

#endif  // QWTELEPORT_TESTS_GOLDEN_TABLES_HPP
