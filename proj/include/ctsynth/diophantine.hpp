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

// The relative norm equation t†t = ξ over Z[ω].

#pragma once

#include <cstddef>
#include <optional>

#include "ctsynth/integer.hpp"
#include "ctsynth/ring.hpp"

namespace ctsynth {

struct NormEquationInstance {
  ZRootTwo xi;
  Integer p;  // ξ•ξ

  static NormEquationInstance of(const ZRootTwo &xi) { return {xi, xi.norm()}; }

  /// x odd, y even, ξ >= 0 and ξ• >= 0 (exact sign tests).
  bool well_formed() const;
};

struct NormSolverOptions {
  /// Random bases tried when looking for a square root of -1 mod p.
  std::size_t max_attempts = 2;
  /// Reject p that fail a probabilistic primality test before doing any
  /// other work. Purely an optimization; results are verified either way.
  bool prime_prefilter = false;
};

/// Some h with 0 < h < p and h² + 1 ≡ 0 (mod p), found as b^((p-1)/4) for
/// random b. p need not be prime. Returns nullopt after max_attempts
/// failed bases, or immediately when p is not 1 mod 4. mult_count, if
/// given, accumulates modular multiplications.
std::optional<Integer> root_minus_one(const Integer &p, std::size_t max_attempts, Rng &rng,
                                      std::size_t *mult_count = nullptr);

/// t with t†t = ξ, checked exactly before returning. Always succeeds for a
/// well-formed instance with p prime; otherwise may return nullopt, and
/// never returns an unverified t. Malformed instances give nullopt.
std::optional<ZOmega> solve_norm_equation(const NormEquationInstance &inst, Rng &rng,
                                          const NormSolverOptions &opts = {});

}  // namespace ctsynth
