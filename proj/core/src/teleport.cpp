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

#include "qwteleport/teleport.hpp"

#include <cmath>
#include <stdexcept>

#include "qwteleport/walk.hpp"

namespace qwt {

std::optional<std::string> procedure_invariant_violation(const Procedure& proc, double tol) {
  if (!is_finite(proc.psi)) return "psi: non-finite entry";
  if (!is_finite(proc.c1)) return "c1: non-finite entry";
  if (!is_finite(proc.c2)) return "c2: non-finite entry";
  if (!is_finite(proc.h1)) return "h1: non-finite entry";
  if (!is_finite(proc.h2_tilde)) return "h2_tilde: non-finite entry";
  if (std::abs(norm(proc.psi) - 1.0) > tol) return "psi: not unit norm";
  if (!is_unitary(proc.c1, tol)) return "c1: not unitary";
  if (!is_unitary(proc.c2, tol)) return "c2: not unitary";
  if (!is_unitary(proc.h1, tol)) return "h1: not unitary";
  if (!is_unitary(proc.h2_tilde, tol)) return "h2_tilde: not unitary";
  return std::nullopt;
}

void validate_procedure(const Procedure& proc, double tol) {
  if (const auto violation = procedure_invariant_violation(proc, tol))
    throw std::invalid_argument(*violation);
}

int position_index(int label) {
  switch (label) {
    case 2: return 0;
    case 0: return 1;
    case -2: return 2;
    default: throw std::invalid_argument("position label must be one of {-2, 0, 2}");
  }
}

Complex h2_entry(const Mat3& h2_tilde, int k, int j) {
  return h2_tilde(position_index(k), position_index(j));
}

BiasPair bias(const Procedure& proc) {
  const Vec2 rotated = proc.c2 * proc.psi;
  return {rotated[0], rotated[1]};
}

namespace {

// Row covector <v| M as a Vec2 of row entries.
Vec2 row_times(const Vec2& bra, const Mat2& m) {
  return {{std::conj(bra[0]) * m(0, 0) + std::conj(bra[1]) * m(1, 0),
           std::conj(bra[0]) * m(0, 1) + std::conj(bra[1]) * m(1, 1)}};
}

Vec2 eta_vector(const Mat2& h1, CoinOutcome eps) {
  const int col = (eps == CoinOutcome::kR) ? 0 : 1;
  return {{h1(0, col), h1(1, col)}};
}

}  // namespace

Mat2 v_matrix(const Procedure& proc, const Outcome& out) {
  const BiasPair beta = bias(proc);
  const Vec2 eta = eta_vector(proc.h1, out.coin);

  Mat2 q1;  // |R><R| c1
  q1(0, 0) = proc.c1(0, 0);
  q1(0, 1) = proc.c1(0, 1);
  Mat2 p1;  // |L><L| c1
  p1(1, 0) = proc.c1(1, 0);
  p1(1, 1) = proc.c1(1, 1);

  const Complex a2 = std::conj(h2_entry(proc.h2_tilde, 2, out.position));
  const Complex a0 = std::conj(h2_entry(proc.h2_tilde, 0, out.position));
  const Complex am2 = std::conj(h2_entry(proc.h2_tilde, -2, out.position));

  const Vec2 row_r = row_times(eta, a2 * q1 + a0 * p1);
  const Vec2 row_l = row_times(eta, a0 * q1 + am2 * p1);

  Mat2 v;
  v(0, 0) = beta.beta_r * row_r[0];
  v(0, 1) = beta.beta_r * row_r[1];
  v(1, 0) = beta.beta_l * row_l[0];
  v(1, 1) = beta.beta_l * row_l[1];
  return v;
}

double OutcomeAnalysis::probability_for(const Vec2& phi) const {
  const Vec2 collapsed = v_tilde * phi;
  const double n = norm(collapsed);
  return n * n;
}

OutcomeAnalysis analyze_outcome(const Procedure& proc, const Outcome& out, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("analyze_outcome: tol must be positive");
  OutcomeAnalysis analysis;
  analysis.outcome = out;
  analysis.v_tilde = v_matrix(proc, out);
  if (const auto kappa = proportional_unitary_scale(analysis.v_tilde, tol)) {
    analysis.kappa = *kappa;
    analysis.correction = Complex(*kappa) * inverse(analysis.v_tilde);
  }
  return analysis;
}

double outcome_probability(const Procedure& proc, const Vec2& phi, const Outcome& out) {
  const Vec2 collapsed = v_matrix(proc, out) * phi;
  const double n = norm(collapsed);
  return n * n;
}

TeleportRound teleport_round(const Procedure& proc, const Vec2& phi, const Outcome& out,
                             double tol) {
  const OutcomeAnalysis analysis = analyze_outcome(proc, out, tol);
  const Vec2 collapsed = analysis.v_tilde * phi;
  const double collapse_norm = norm(collapsed);
  if (collapse_norm * collapse_norm <= tol)
    throw std::domain_error("teleport_round: outcome has zero probability for this target");
  const Vec2 normalized = Complex(1.0 / collapse_norm) * collapsed;
  const Vec2 bob = analysis.correction ? (*analysis.correction * normalized) : normalized;
  return {bob, std::abs(inner(phi, bob))};
}

bool full_state_check(const Procedure& proc, const Vec2& phi) {
  const Vec2 coin_vectors[2] = {phi, proc.psi};
  WalkState state = initial_state(0, coin_vectors);
  state = step(state, proc.c1, 1);
  state = step(state, proc.c2, 2);

  for (const Outcome& out : kAllOutcomes) {
    const Vec2 eta = eta_vector(proc.h1, out.coin);
    // Project the walk state onto |xi_j> ⊗ |eta_eps>; coin-1 is bit 0,
    // Bob's coin is bit 1.
    Vec2 bob{};
    for (int pos : {2, 0, -2}) {
      const Complex xi_amp = std::conj(h2_entry(proc.h2_tilde, pos, out.position));
      for (int a = 0; a < 2; ++a) {
        const Complex weight = xi_amp * std::conj(eta[a]);
        bob[0] += weight * state.amplitude(pos, a);
        bob[1] += weight * state.amplitude(pos, a + 2);
      }
    }
    const Vec2 expected = v_matrix(proc, out) * phi;
    if (norm(bob - expected) > 1e-12) return false;
  }
  return true;
}

}  // namespace qwt
