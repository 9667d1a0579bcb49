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
#include <numbers>
#include <stdexcept>

namespace qwt {

Vec2 ket_r() { return {{Complex(1.0), Complex(0.0)}}; }
Vec2 ket_l() { return {{Complex(0.0), Complex(1.0)}}; }

Mat2 identity2() { return {{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}}; }

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m(i, i) = 1.0;
  return m;
}

Mat2 pauli_x() { return {{Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)}}; }
Mat2 pauli_z() { return {{Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)}}; }

Mat2 hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {{Complex(s), Complex(s), Complex(s), Complex(-s)}};
}

Vec2 operator+(const Vec2& a, const Vec2& b) { return {{a.e[0] + b.e[0], a.e[1] + b.e[1]}}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {{a.e[0] - b.e[0], a.e[1] - b.e[1]}}; }
Vec2 operator*(const Complex& s, const Vec2& v) { return {{s * v.e[0], s * v.e[1]}}; }

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Mat2 operator*(const Complex& s, const Mat2& m) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * m.e[i];
  return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]}};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3 operator*(const Complex& s, const Mat3& m) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * m.e[i];
  return r;
}

Complex inner(const Vec2& a, const Vec2& b) {
  return std::conj(a.e[0]) * b.e[0] + std::conj(a.e[1]) * b.e[1];
}

double norm(const Vec2& v) { return std::sqrt(std::norm(v.e[0]) + std::norm(v.e[1])); }

Mat2 adjoint(const Mat2& m) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

Mat3 adjoint(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

Complex trace(const Mat2& m) { return m(0, 0) + m(1, 1); }

Complex det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Mat2 inverse(const Mat2& m) {
  const Complex d = det(m);
  if (std::abs(d) == 0.0) throw std::domain_error("inverse: singular matrix");
  const Complex inv_d = 1.0 / d;
  return {{inv_d * m(1, 1), -inv_d * m(0, 1), -inv_d * m(1, 0), inv_d * m(0, 0)}};
}

double frobenius_norm(const Mat2& m) {
  double s = 0.0;
  for (const Complex& z : m.e) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool is_finite(const Vec2& v) { return finite(v.e[0]) && finite(v.e[1]); }

bool is_finite(const Mat2& m) {
  for (const Complex& z : m.e)
    if (!finite(z)) return false;
  return true;
}

bool is_finite(const Mat3& m) {
  for (const Complex& z : m.e)
    if (!finite(z)) return false;
  return true;
}

bool is_unitary(const Mat2& m, double tol) {
  const Mat2 g = adjoint(m) * m;
  double dev = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
      dev = std::max(dev, std::abs(g(i, j) - want));
    }
  return dev <= tol;
}

bool is_unitary(const Mat3& m, double tol) {
  const Mat3 g = adjoint(m) * m;
  double dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
      dev = std::max(dev, std::abs(g(i, j) - want));
    }
  return dev <= tol;
}

std::optional<double> proportional_unitary_scale(const Mat2& m, double tol) {
  const Mat2 g = adjoint(m) * m;
  const double off = std::max(std::abs(g(0, 1)), std::abs(g(1, 0)));
  const double diag_diff = std::abs(g(0, 0) - g(1, 1));
  if (off > tol || diag_diff > tol) return std::nullopt;
  const double kappa_sq = 0.5 * (g(0, 0).real() + g(1, 1).real());
  if (kappa_sq <= 0.0) return std::nullopt;
  const double kappa = std::sqrt(kappa_sq);
  if (kappa <= tol) return std::nullopt;
  return kappa;
}

double distance_up_to_phase(const Mat2& a, const Mat2& b) {
  const Complex t = trace(adjoint(b) * a);
  Complex theta(1.0);
  if (std::abs(t) > 1e-14) {
    theta = t / std::abs(t);
  } else {
    // Trace-free case: the value is theta-independent; align on the
    // largest-modulus entry of b anyway to keep the result well defined.
    std::size_t k = 0;
    for (std::size_t i = 1; i < 4; ++i)
      if (std::abs(b.e[i]) > std::abs(b.e[k])) k = i;
    if (std::abs(b.e[k]) > 0.0 && std::abs(a.e[k]) > 0.0) {
      const Complex ratio = a.e[k] / b.e[k];
      theta = ratio / std::abs(ratio);
    }
  }
  return frobenius_norm(a - theta * b);
}

namespace {

// Gram-Schmidt with positive-real diagonal; on Gaussian input the result is
// Haar distributed.
template <typename Mat, int N>
Mat gram_schmidt_haar(Rng& rng) {
  Complex col[N][N];
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) col[j][i] = Complex(rng.gaussian(), rng.gaussian());
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (int i = 0; i < N; ++i) proj += std::conj(col[k][i]) * col[j][i];
      for (int i = 0; i < N; ++i) col[j][i] -= proj * col[k][i];
    }
    double nrm = 0.0;
    for (int i = 0; i < N; ++i) nrm += std::norm(col[j][i]);
    nrm = std::sqrt(nrm);
    for (int i = 0; i < N; ++i) col[j][i] /= nrm;
  }
  Mat u;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) u(i, j) = col[j][i];
  return u;
}

}  // namespace

Mat2 haar_unitary2(Rng& rng) { return gram_schmidt_haar<Mat2, 2>(rng); }

Mat2 haar_unitary2(std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary2(rng);
}

Mat3 haar_unitary3(Rng& rng) { return gram_schmidt_haar<Mat3, 3>(rng); }

}  // namespace qwt
