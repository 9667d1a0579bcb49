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

#ifndef QWTELEPORT_ALGEBRA_HPP
#define QWTELEPORT_ALGEBRA_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "qwteleport/rng.hpp"

namespace qwt {

using Complex = std::complex<double>;

/// Column vector in C^2, entries ordered (R-component, L-component).
struct Vec2 {
  std::array<Complex, 2> e{};

  Complex& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  const Complex& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
};

/// 2x2 complex matrix, row-major, basis order (R, L).
struct Mat2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 2 + c)]; }
  const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 2 + c)]; }
};

/// 3x3 complex matrix, row-major.
struct Mat3 {
  std::array<Complex, 9> e{};

  Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 3 + c)]; }
  const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 3 + c)]; }
};

// ---- constants ----

Vec2 ket_r();
Vec2 ket_l();
Mat2 identity2();
Mat3 identity3();
Mat2 pauli_x();
Mat2 pauli_z();
Mat2 hadamard();

// ---- elementwise / arithmetic ----

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(const Complex& s, const Vec2& v);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Complex& s, const Mat2& m);
Mat2 operator*(const Mat2& a, const Mat2& b);
Vec2 operator*(const Mat2& m, const Vec2& v);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(const Complex& s, const Mat3& m);

/// <a|b> with the conjugate on the first argument.
Complex inner(const Vec2& a, const Vec2& b);
double norm(const Vec2& v);

Mat2 adjoint(const Mat2& m);
Mat3 adjoint(const Mat3& m);
Complex trace(const Mat2& m);
Complex det(const Mat2& m);

/// Inverse of a 2x2 matrix. Throws std::domain_error when singular.
Mat2 inverse(const Mat2& m);

double frobenius_norm(const Mat2& m);

bool is_finite(const Vec2& v);
bool is_finite(const Mat2& m);
bool is_finite(const Mat3& m);

/// True iff the max-norm of (m^dagger m - I) is at most tol.
bool is_unitary(const Mat2& m, double tol);
bool is_unitary(const Mat3& m, double tol);

/// If m^dagger m = k^2 I within tol (off-diagonals and the diagonal
/// difference both at most tol), returns k > 0; otherwise nullopt. The zero
/// matrix (and anything with k <= tol) is rejected: a strictly positive scale
/// is what makes the matrix invertible up to a constant.
std::optional<double> proportional_unitary_scale(const Mat2& m, double tol);

/// min over unit-modulus theta of the Frobenius norm ||a - theta*b||.
/// The optimum is theta = tr(b^dagger a)/|tr(b^dagger a)|; when that trace
/// vanishes the value is theta-independent and the phase is aligned on the
/// largest-modulus entry of b instead. Both arguments zero gives 0.
double distance_up_to_phase(const Mat2& a, const Mat2& b);

/// Haar-distributed U(2): Gram-Schmidt of a complex-Gaussian matrix with the
/// positive-real-diagonal convention (same law as QR plus diagonal phase
/// correction). Deterministic given the generator state.
Mat2 haar_unitary2(Rng& rng);
Mat2 haar_unitary2(std::uint64_t seed);

/// Haar-distributed U(3), same construction.
Mat3 haar_unitary3(Rng& rng);

}  // namespace qwt

#endif  // QWTELEPORT_ALGEBRA_HPP
