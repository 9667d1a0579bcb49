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

#ifndef QWTELEPORT_TELEPORT_HPP
#define QWTELEPORT_TELEPORT_HPP

#include <array>
#include <optional>
#include <string>

#include "qwteleport/algebra.hpp"

namespace qwt {

// The teleportation scheme: Alice holds the walker position and coin 1, Bob
// holds coin 2. Run two walk steps from |0> ⊗ |phi> ⊗ |psi>, measure Alice's
// coin in the basis {h1|R>, h1|L>} and the position in the basis given by
// h2_tilde on span{|2>,|0>,|-2>} (identity elsewhere), then apply a
// correction on Bob's side chosen from the observed outcome.

/// One teleportation setup. `h2_tilde` is the 3x3 position-measurement block
/// with rows and columns ordered (|2>, |0>, |-2>).
struct Procedure {
  Vec2 psi;       // Bob's initial coin state, unit norm
  Mat2 c1;        // step-1 coin (Alice)
  Mat2 c2;        // step-2 coin (Bob)
  Mat2 h1;        // Alice coin measurement basis, columns are the eigenvectors
  Mat3 h2_tilde;  // position measurement block, basis order (2, 0, -2)
};

/// First violated invariant (field name first), or nullopt when valid.
/// Checks finiteness, unitarity of the four operators, and ||psi|| = 1,
/// all at `tol`.
std::optional<std::string> procedure_invariant_violation(const Procedure& proc,
                                                         double tol = 1e-10);

/// Throws std::invalid_argument naming the offending field.
void validate_procedure(const Procedure& proc, double tol = 1e-10);

enum class CoinOutcome : std::uint8_t { kR = 0, kL = 1 };

/// A measurement record: position label j in {-2, 0, 2} and coin label.
struct Outcome {
  int position = 2;
  CoinOutcome coin = CoinOutcome::kR;

  bool operator==(const Outcome&) const = default;
};

/// The six possible outcomes in canonical table order:
/// (2,R), (0,R), (-2,R), (2,L), (0,L), (-2,L).
inline constexpr std::array<Outcome, 6> kAllOutcomes = {{
    {2, CoinOutcome::kR},
    {0, CoinOutcome::kR},
    {-2, CoinOutcome::kR},
    {2, CoinOutcome::kL},
    {0, CoinOutcome::kL},
    {-2, CoinOutcome::kL},
}};

/// Index of a position label in the (2, 0, -2) basis order. Throws on other
/// labels.
int position_index(int label);

/// Entry <k| h2_tilde |j> for labels k, j in {2, 0, -2}.
Complex h2_entry(const Mat3& h2_tilde, int k, int j);

/// Amplitudes beta_eps = <eps| c2 |psi> of Bob's coin after his step.
struct BiasPair {
  Complex beta_r;
  Complex beta_l;
};

BiasPair bias(const Procedure& proc);

/// The unnormalized 2x2 map sending the target state to Bob's
/// post-measurement state for the given outcome: with eta = h1|eps>,
/// a(k) = conj(<k|h2_tilde|j>), P1 = |L><L|c1 and Q1 = |R><R|c1,
///   row R = beta_R * <eta| (a(2) Q1 + a(0) P1)
///   row L = beta_L * <eta| (a(0) Q1 + a(-2) P1).
Mat2 v_matrix(const Procedure& proc, const Outcome& out);

/// Everything derivable from one outcome. When v_tilde is proportional to a
/// unitary with scale kappa > 0, `correction` is the unitary kappa *
/// v_tilde^{-1} that restores the target on Bob's side.
struct OutcomeAnalysis {
  Outcome outcome;
  Mat2 v_tilde;
  std::optional<double> kappa;
  std::optional<Mat2> correction;

  /// ||v_tilde * phi||^2, the probability of this outcome for target phi.
  double probability_for(const Vec2& phi) const;
};

OutcomeAnalysis analyze_outcome(const Procedure& proc, const Outcome& out, double tol);

/// Probability of observing `out` when teleporting unit target phi.
/// The six outcomes sum to 1.
double outcome_probability(const Procedure& proc, const Vec2& phi, const Outcome& out);

struct TeleportRound {
  Vec2 bob_state;   // Bob's state after collapse and (when defined) correction
  double fidelity;  // |<phi|bob_state>|
};

/// Collapses onto the outcome and applies the correction when one exists.
/// Throws std::domain_error when the outcome probability is at most tol.
TeleportRound teleport_round(const Procedure& proc, const Vec2& phi, const Outcome& out,
                             double tol);

/// Cross-validates the closed-form v_matrix against the walk engine: runs the
/// two-coin walk for two steps, projects onto every (position, coin) outcome
/// pair, and checks Bob's residual vector equals v_matrix(proc, out) * phi
/// entrywise within 1e-12.
bool full_state_check(const Procedure& proc, const Vec2& phi);

}  // namespace qwt

#endif  // QWTELEPORT_TELEPORT_HPP
