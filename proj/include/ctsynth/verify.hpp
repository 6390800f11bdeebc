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

// Certified operator-norm distances and T-count lower bounds.

#pragma once

#include <array>
#include <complex>
#include <string>

#include "ctsynth/angle.hpp"
#include "ctsynth/high_prec.hpp"
#include "ctsynth/integer.hpp"
#include "ctsynth/unitary.hpp"

namespace ctsynth {

/// 2×2 complex matrix with interval entries.
struct Matrix2 {
  std::array<ComplexInterval, 4> m;  // row-major

  const ComplexInterval &at(int r, int c) const { return m[2 * r + c]; }

  static Matrix2 of(const UnitaryDOmega &u, Precision prec);
  static Matrix2 from_complex(const std::array<std::complex<double>, 4> &entries, Precision prec);
  /// Each entry is "re" or "re,im" with decimal parts, e.g. "0.6" or "0,-0.8".
  static Matrix2 parse(const std::array<std::string, 4> &entries, Precision prec);

  friend Matrix2 operator-(const Matrix2 &x, const Matrix2 &y);
  friend Matrix2 operator*(const Matrix2 &x, const Matrix2 &y);
};

/// Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2}).
Matrix2 rz_matrix(const Interval &theta);

/// Upper bound on the largest singular value of every matrix in d.
HighPrecReal spectral_norm_upper(const Matrix2 &d);

/// max(128, 2k + 64) bits.
Precision verification_precision(long k);

/// Certified upper bound on ‖U - Rz(θ)‖. When U has the form
/// [[u, -t†], [t, u†]] the identity ‖U - Rz(θ)‖² = 2 - 2·Re(û†z) is used;
/// otherwise the largest singular value of the difference. prec = 0 picks
/// verification_precision(k of U).
HighPrecReal op_norm_error(const UnitaryDOmega &u, const AngleExpr &theta, Precision prec = 0);

/// Certified upper bound on ‖U - target‖.
HighPrecReal op_norm_distance(const UnitaryDOmega &u, const Matrix2 &target, Precision prec = 0);

/// -9 + 4·log2(1/ε): T-count needed in the worst case over z-rotations.
double lower_bound_tcount(const Rational &epsilon);

/// log2((1/(192 ε³) + 2)/3): the T-count at which the 192·(3·2ⁿ - 2)
/// distinct operators first suffice to ε-cover SU(2) by volume.
double typical_lower_bound_tcount(const Rational &epsilon);

/// log2(1/ε) for exact ε > 0.
double log2_inverse(const Rational &epsilon);

}  // namespace ctsynth
