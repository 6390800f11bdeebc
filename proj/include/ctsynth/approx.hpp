// Copyright 2026 The ctsynth Authors
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

// ε-approximation of z-rotations Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2}) by
// Clifford+T operators of the form
//
//   U = 1/√2^k [[u, -t†], [t, u†]],   u, t ∈ Z[ω].
//
// A candidate u has û = u/√2^k in the ε-region {u : |u| <= 1,
// u·z >= 1 - ε²/2} with z = e^{-iθ/2}, and û• in the unit disk. Then
// ξ = 2^k - u†u is totally positive and t solves t†t = ξ.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "ctsynth/angle.hpp"
#include "ctsynth/high_prec.hpp"
#include "ctsynth/integer.hpp"
#include "ctsynth/ring.hpp"
#include "ctsynth/unitary.hpp"
#include "ctsynth/verify.hpp"

namespace ctsynth {

/// Least k with k >= 5/2 + 2·log2(1+√2) + 2·log2(1/ε), decided exactly.
long min_denominator_exponent(const Rational &epsilon);

/// ⌊4√2/ε⌋, the number of candidate slots.
Integer slot_count(const Rational &epsilon);

/// Working precision for denominator exponent k: max(64, 2k + 32) bits, or
/// the value of CTSYNTH_PRECISION when that is set to a larger number.
Precision working_precision(long k);

struct EpsilonProblem {
  AngleExpr theta;
  Rational epsilon;
  long k = 0;
  Integer n;
  Precision prec = 64;
  /// θ = θ' + m·π/2 with |θ'| <= π/4. Rz(θ) = Rz(θ')·ω^{-m}S^m, so a
  /// solution u, t for θ' becomes u·ω^{-m}, t·ω^{-m} for θ.
  int quarter_turns = 0;  // m mod 8
  /// Enclosures of z = e^{-iθ'/2}.
  Interval zx, zy;
  /// Chord of the unit circle cut by u·z = 1 - ε²/4.
  Interval y_min, y_max;
  /// Exact inner ends of [y_min, y_max]; slots are spaced between them.
  Rational slot_lo, slot_hi;
};

/// Throws std::invalid_argument unless 0 < ε <= 1/2. k defaults to
/// min_denominator_exponent(ε).
EpsilonProblem make_problem(const AngleExpr &theta, const Rational &epsilon,
                            std::optional<long> k = std::nullopt);

/// u_hat·z >= 1 - ε²/2 and |u_hat|² <= 1 for the rotated direction z of
/// the problem. True only when both hold for every point of the
/// enclosures.
bool region_contains(const ComplexInterval &u_hat, const EpsilonProblem &prob);

/// Same test for an exact point (x, y); the unit-disk part is decided
/// exactly, so points on the circle are included.
bool region_contains(const Rational &x, const Rational &y, const EpsilonProblem &prob);

struct Candidate {
  ZOmega u;
  long k = 0;
  ZRootTwo xi;   // 2^k - u†u
  Integer p;     // ξ•ξ
  Integer slot;
};

/// One draw: a uniform slot j, then β and α from the two grid problems,
/// then exact re-validation. nullopt when the slot yields nothing valid.
/// Throws std::logic_error if a validated candidate breaks the bound
/// ξ <= 2^k ε² (which implies p <= 2^{2k} ε²).
std::optional<Candidate> random_candidate(const EpsilonProblem &prob, Rng &rng);

struct SynthLimits {
  /// Per-k candidate budget; 0 means 64·k.
  std::size_t max_candidates_per_k = 0;
  int max_escalations = 3;
  /// Worker threads drawing candidates. 1 is deterministic for a seed.
  int workers = 1;
};

struct SynthStats {
  Rational epsilon;
  long k_initial = 0;
  long k = 0;
  std::size_t t_count = 0;
  HighPrecReal error_bound;
  /// Candidates handed to the norm-equation solver.
  std::size_t candidates_tried = 0;
  /// Slots whose grid problems or validation produced no candidate.
  std::size_t slot_failures = 0;
  double wall_time_s = 0;
};

class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(const std::string &msg, SynthStats stats)
      : std::runtime_error(msg), stats_(std::move(stats)) {}
  const SynthStats &stats() const { return stats_; }

 private:
  SynthStats stats_;
};

struct RzApproximation {
  UnitaryDOmega u;
  GateWord word;  // Matsumoto-Amano normal form of u
  SynthStats stats;
};

/// Some U over D[ω] with certified ‖U - Rz(θ)‖ <= ε.
RzApproximation approximate_rz(const AngleExpr &theta, const Rational &epsilon, Rng &rng,
                               const SynthLimits &limits = {});

struct Su2Approximation {
  GateWord word;  // Matsumoto-Amano normal form
  UnitaryDOmega u;
  /// Euler angles with target ≈ Rz(beta)·H·Rz(gamma)·H·Rz(delta).
  HighPrecReal beta, gamma, delta;
  std::array<SynthStats, 3> stats;  // beta, gamma, delta rotations
  HighPrecReal error_bound;
};

/// Approximates a special unitary target within ε using three z-rotations,
/// each to (just under) ε/3. Throws std::invalid_argument when the target
/// is not special unitary to within 2^-40, and SynthesisError when a
/// rotation fails or the final certified error exceeds ε.
Su2Approximation approximate_su2(const Matrix2 &target, const Rational &epsilon, Rng &rng,
                                 const SynthLimits &limits = {});

}  // namespace ctsynth
