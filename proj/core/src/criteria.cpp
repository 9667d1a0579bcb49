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

#include "qwteleport/criteria.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qwteleport/procedure_io.hpp"
#include "qwteleport/rng.hpp"

namespace qwt {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt3 = 0.5773502691896257645;

}  // namespace

bool cond_i(const Mat2& h1, double tol) {
  return std::abs(std::abs(h1(0, 0)) - std::abs(h1(0, 1))) <= tol;
}

bool cond_ii(const Mat2& c2, const Vec2& psi, double tol) {
  const Vec2 rotated = c2 * psi;
  return std::abs(std::abs(rotated[0]) - kInvSqrt2) <= tol &&
         std::abs(std::abs(rotated[1]) - kInvSqrt2) <= tol;
}

namespace {

// The three admissible zero patterns: exactly one column of shape (0,t,0)
// (the "lone" column), the other two of shape (*,0,*). p and q are the outer
// entries of the leftmost starred column.
struct ZeroPattern {
  int lone_column;
  int pq_column;
};

constexpr ZeroPattern kPatterns[3] = {{2, 0}, {1, 0}, {0, 1}};

bool matches_pattern(const Mat3& h2, const ZeroPattern& pat, double tol) {
  for (int c = 0; c < 3; ++c) {
    const bool lone = (c == pat.lone_column);
    for (int r = 0; r < 3; ++r) {
      const bool should_be_zero = lone ? (r != 1) : (r == 1);
      const double mag = std::abs(h2(r, c));
      if (should_be_zero ? (mag > tol) : (mag <= tol)) return false;
    }
  }
  return std::abs(std::abs(h2(0, pat.pq_column)) - std::abs(h2(2, pat.pq_column))) <= tol;
}

}  // namespace

bool cond_iii_i(const Mat3& h2, double tol) {
  for (const ZeroPattern& pat : kPatterns)
    if (matches_pattern(h2, pat, tol)) return true;
  return false;
}

bool cond_iii_ii(const Mat3& h2, double tol) {
  for (int c = 0; c < 3; ++c) {
    const Complex a2 = h2(0, c), a0 = h2(1, c), am2 = h2(2, c);
    if (std::abs(std::abs(a2) - std::abs(am2)) > tol) return false;
    if (std::abs(a2 * std::conj(a0) + a0 * std::conj(am2)) > tol) return false;
  }
  return true;
}

bool x1(const Procedure& proc, double tol) {
  for (const Complex& z : proc.h2_tilde.e)
    if (std::abs(std::abs(z) - kInvSqrt3) > tol) return false;
  return cond_ii(proc.c2, proc.psi, tol);
}

bool y1(const Procedure& proc, double tol) {
  const BiasPair beta = bias(proc);
  const double br2 = std::norm(beta.beta_r);
  const double bl2 = std::norm(beta.beta_l);
  for (int c = 0; c < 3; ++c) {
    const double a2 = std::norm(proc.h2_tilde(0, c));
    const double a0 = std::norm(proc.h2_tilde(1, c));
    const double am2 = std::norm(proc.h2_tilde(2, c));
    const double row_gap = a2 * br2 - a0 * bl2;       // A
    const double row_gap_b = a0 * br2 - am2 * bl2;    // B
    if (std::abs(row_gap + row_gap_b) > tol) return false;
  }
  return cond_i(proc.h1, tol);
}

bool x2(const Procedure& proc, double tol) { return cond_iii_i(proc.h2_tilde, tol); }

bool y2(const Procedure& proc, double tol) {
  for (int c = 0; c < 3; ++c) {
    const Complex a2 = proc.h2_tilde(0, c);
    const Complex a0 = proc.h2_tilde(1, c);
    const Complex am2 = proc.h2_tilde(2, c);
    if (std::abs(a2 * std::conj(a0) + a0 * std::conj(am2)) > tol) return false;
  }
  return cond_i(proc.h1, tol);
}

bool theorem_member(const Procedure& proc, double tol) {
  return cond_i(proc.h1, tol) && cond_ii(proc.c2, proc.psi, tol) &&
         (cond_iii_i(proc.h2_tilde, tol) || cond_iii_ii(proc.h2_tilde, tol));
}

bool oracle_member(const Procedure& proc, double tol) {
  for (const Outcome& out : kAllOutcomes) {
    const auto kappa = proportional_unitary_scale(v_matrix(proc, out), tol);
    if (!kappa || *kappa <= tol) return false;
  }
  return true;
}

Verdict classify(const Procedure& proc, double tol) {
  Verdict v;
  v.cond_i = cond_i(proc.h1, tol);
  v.cond_ii = cond_ii(proc.c2, proc.psi, tol);
  v.cond_iii_i = cond_iii_i(proc.h2_tilde, tol);
  v.cond_iii_ii = cond_iii_ii(proc.h2_tilde, tol);
  v.theorem_member = v.cond_i && v.cond_ii && (v.cond_iii_i || v.cond_iii_ii);
  v.oracle_member = oracle_member(proc, tol);
  return v;
}

bool near_boundary(const Procedure& proc, double tol) {
  return theorem_member(proc, tol) != theorem_member(proc, 10.0 * tol) ||
         oracle_member(proc, tol) != oracle_member(proc, 10.0 * tol);
}

// ---- samplers ----

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kGeneric: return "generic";
    case Family::kHSet: return "h_set";
    case Family::kTwistedFourier: return "twisted_fourier";
    case Family::kSeed3Orbit: return "seed3_orbit";
  }
  throw std::invalid_argument("unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

namespace {

Complex unit_phase(Rng& rng) { return std::polar(1.0, rng.angle()); }

// Unitary with all four entries of modulus 1/sqrt(2); satisfies cond_i.
Mat2 equal_modulus_h1(Rng& rng) {
  const double chi1 = rng.angle();
  const double chi2 = rng.angle();
  const double delta = rng.angle();
  Mat2 h;
  h(0, 0) = std::polar(kInvSqrt2, chi1);
  h(0, 1) = std::polar(kInvSqrt2, chi2);
  h(1, 0) = -std::polar(kInvSqrt2, delta - chi2);
  h(1, 1) = std::polar(kInvSqrt2, delta - chi1);
  return h;
}

// Haar c2 together with a psi that makes c2*psi unbiased.
void unbiased_coin_and_psi(Rng& rng, Mat2& c2, Vec2& psi) {
  c2 = haar_unitary2(rng);
  const Vec2 rotated = {{std::polar(kInvSqrt2, rng.angle()), std::polar(kInvSqrt2, rng.angle())}};
  psi = adjoint(c2) * rotated;
}

Vec2 random_unit_vec2(Rng& rng) {
  Vec2 v = {{Complex(rng.gaussian(), rng.gaussian()), Complex(rng.gaussian(), rng.gaussian())}};
  return Complex(1.0 / norm(v)) * v;
}

constexpr int kPerm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

Mat3 permute_columns(const Mat3& m, const int perm[3]) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(i, perm[j]);
  return r;
}

Mat3 diag3(const Complex& a, const Complex& b, const Complex& c) {
  Mat3 d;
  d(0, 0) = a;
  d(1, 1) = b;
  d(2, 2) = c;
  return d;
}

// Random member of the admissible zero-pattern set: columns (p,0,q), (r,0,s)
// and (0,t,0) with |p|=|q|=|r|=|s|=1/sqrt(2), |t|=1, and (r,s) orthogonal to
// (p,q) so the matrix is unitary.
Mat3 random_zero_pattern(Rng& rng) {
  const int lone_column = static_cast<int>(rng.uniform() * 3.0) % 3;
  const Complex p = std::polar(kInvSqrt2, rng.angle());
  const Complex q = std::polar(kInvSqrt2, rng.angle());
  const Complex gamma = unit_phase(rng);
  const Complex r = -gamma * std::conj(q);
  const Complex s = gamma * std::conj(p);
  const Complex t = unit_phase(rng);

  Mat3 m;
  int starred[2];
  int idx = 0;
  for (int c = 0; c < 3; ++c)
    if (c != lone_column) starred[idx++] = c;
  m(0, starred[0]) = p;
  m(2, starred[0]) = q;
  m(0, starred[1]) = r;
  m(2, starred[1]) = s;
  m(1, lone_column) = t;
  return m;
}

// 3-point Fourier matrix twisted by row phases with ph2 + phm2 - 2*ph0 = pi
// (mod 2pi), column phases and a column permutation; all entries have
// modulus 1/sqrt(3) and every column satisfies the phase-antisymmetry
// product, so the block lands in the cond_iii_ii class.
Mat3 twisted_fourier_block(Rng& rng) {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  Mat3 fourier;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      fourier(r, c) = kInvSqrt3 * std::pow(w, static_cast<double>((r * c) % 3));
  const double ph2 = rng.angle();
  const double ph0 = rng.angle();
  const double phm2 = std::numbers::pi + 2.0 * ph0 - ph2;
  const Mat3 left = diag3(std::polar(1.0, ph2), std::polar(1.0, ph0), std::polar(1.0, phm2));
  const Mat3 right = diag3(unit_phase(rng), unit_phase(rng), unit_phase(rng));
  const int perm = static_cast<int>(rng.uniform() * 6.0) % 6;
  return permute_columns(left * fourier * right, kPerm3[perm]);
}

// Reference cond_iii_ii block for the orbit sampler, rows/cols in basis
// order (2, 0, -2).
Mat3 seed3_base() {
  Mat3 m;
  const Complex i(0.0, 1.0);
  m(0, 0) = -0.5 * i;
  m(0, 1) = -kInvSqrt2;
  m(0, 2) = 0.5 * i;
  m(1, 0) = kInvSqrt2;
  m(1, 1) = 0.0;
  m(1, 2) = kInvSqrt2;
  m(2, 0) = -0.5 * i;
  m(2, 1) = kInvSqrt2;
  m(2, 2) = 0.5 * i;
  return m;
}

// Left row phases constrained by a + c - 2b = 0 (mod 2pi) preserve the
// phase-antisymmetry product; right phases and column permutations always do.
Mat3 seed3_orbit_block(Rng& rng) {
  const double a = rng.angle();
  const double b = rng.angle();
  const double c = 2.0 * b - a;
  const Mat3 left = diag3(std::polar(1.0, a), std::polar(1.0, b), std::polar(1.0, c));
  const Mat3 right = diag3(unit_phase(rng), unit_phase(rng), unit_phase(rng));
  const int perm = static_cast<int>(rng.uniform() * 6.0) % 6;
  return permute_columns(left * seed3_base() * right, kPerm3[perm]);
}

}  // namespace

Procedure sample_procedure(Family family, std::uint64_t seed) {
  Rng rng(seed);
  Procedure proc;
  if (family == Family::kGeneric) {
    proc.psi = random_unit_vec2(rng);
    proc.c1 = haar_unitary2(rng);
    proc.c2 = haar_unitary2(rng);
    proc.h1 = haar_unitary2(rng);
    proc.h2_tilde = haar_unitary3(rng);
    return proc;
  }
  proc.c1 = haar_unitary2(rng);
  unbiased_coin_and_psi(rng, proc.c2, proc.psi);
  proc.h1 = equal_modulus_h1(rng);
  switch (family) {
    case Family::kHSet: proc.h2_tilde = random_zero_pattern(rng); break;
    case Family::kTwistedFourier: proc.h2_tilde = twisted_fourier_block(rng); break;
    case Family::kSeed3Orbit: proc.h2_tilde = seed3_orbit_block(rng); break;
    case Family::kGeneric: break;  // handled above
  }
  return proc;
}

std::uint64_t trial_seed(std::uint64_t harness_seed, Family family, int trial) {
  const std::uint64_t lane = Rng::derive(harness_seed, static_cast<std::uint64_t>(family) + 1);
  return Rng::derive(lane, static_cast<std::uint64_t>(trial));
}

// ---- harness ----

int HarnessReport::hard_disagreements() const {
  int n = 0;
  for (const Disagreement& d : disagreements)
    if (!d.flagged) ++n;
  return n;
}

std::string HarnessReport::to_text() const {
  char line[256];
  std::string text;
  std::snprintf(line, sizeof(line),
                "equivalence harness  seed=%llu  tol=%.1e  trials_per_family=%d\n",
                static_cast<unsigned long long>(seed), tol, trials_per_family);
  text += line;
  text += "family            trials  theorem  oracle   agree  flagged\n";
  for (const auto& [family, stats] : families) {
    std::snprintf(line, sizeof(line), "%-16s  %6d  %7d  %6d  %6d  %7d\n",
                  std::string(family_name(family)).c_str(), stats.trials, stats.theorem_members,
                  stats.oracle_members, stats.agreements, stats.flagged);
    text += line;
  }
  std::snprintf(line, sizeof(line), "disagreements (excluding flagged): %d\n",
                hard_disagreements());
  text += line;
  for (const Disagreement& d : disagreements) {
    std::snprintf(line, sizeof(line),
                  "disagreement: family=%s trial=%d seed=%llu theorem=%d oracle=%d flagged=%d\n",
                  std::string(family_name(d.family)).c_str(), d.trial,
                  static_cast<unsigned long long>(d.seed), d.verdict.theorem_member ? 1 : 0,
                  d.verdict.oracle_member ? 1 : 0, d.flagged ? 1 : 0);
    text += line;
    text += d.config_json;
    text += "\n";
  }
  text += pass() ? "result: PASS\n" : "result: FAIL\n";
  return text;
}

HarnessReport equivalence_harness(int trials_per_family, std::uint64_t seed, double tol,
                                  std::span<const Family> families) {
  if (trials_per_family < 1)
    throw std::invalid_argument("equivalence_harness: trials_per_family must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("equivalence_harness: tol must be positive");

  HarnessReport report;
  report.seed = seed;
  report.tol = tol;
  report.trials_per_family = trials_per_family;

  for (const Family family : families) {
    FamilyStats stats;
    stats.trials = trials_per_family;
    for (int trial = 0; trial < trials_per_family; ++trial) {
      const std::uint64_t proc_seed = trial_seed(seed, family, trial);
      const Procedure proc = sample_procedure(family, proc_seed);
      const Verdict verdict = classify(proc, tol);
      const bool flagged = near_boundary(proc, tol);
      stats.theorem_members += verdict.theorem_member ? 1 : 0;
      stats.oracle_members += verdict.oracle_member ? 1 : 0;
      stats.agreements += verdict.agree() ? 1 : 0;
      stats.flagged += flagged ? 1 : 0;
      if (!verdict.agree()) {
        Disagreement d;
        d.family = family;
        d.trial = trial;
        d.seed = proc_seed;
        d.verdict = verdict;
        d.flagged = flagged;
        d.config_json = serialize_procedure_config({proc, std::nullopt, ""});
        report.disagreements.push_back(std::move(d));
      }
    }
    report.families.emplace_back(family, stats);
  }
  return report;
}

}  // namespace qwt
