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

// Exact 2×2 matrices over D[ω] and Clifford+T gate words.
//
// A word is written in matrix-product order: the leftmost gate is applied
// last, so "HT" evaluates to H·T.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ctsynth/ring.hpp"

namespace ctsynth {

/// (1/√2^k)·[[m00, m01], [m10, m11]] with numerators in Z[ω].
class UnitaryDOmega {
 public:
  UnitaryDOmega() : UnitaryDOmega(ZOmega(1), ZOmega(0), ZOmega(0), ZOmega(1), 0) {}
  UnitaryDOmega(ZOmega m00, ZOmega m01, ZOmega m10, ZOmega m11, long k);

  /// (1/√2^k)·[[u, -t†], [t, u†]].
  static UnitaryDOmega from_columns(const ZOmega &u, const ZOmega &t, long k);

  const ZOmega &num(int row, int col) const { return m_[2 * row + col]; }
  DOmega entry(int row, int col) const { return {num(row, col), k_}; }
  long k() const { return k_; }

  /// Same matrix with the least denominator exponent.
  UnitaryDOmega reduce() const;
  /// Least k with √2^k·U over Z[ω].
  long least_k() const { return reduce().k(); }

  UnitaryDOmega dagger() const;
  /// Exact scalar multiple ω^j·U.
  UnitaryDOmega mul_omega_pow(long j) const;
  friend UnitaryDOmega operator*(const UnitaryDOmega &x, const UnitaryDOmega &y);
  /// Value equality.
  friend bool operator==(const UnitaryDOmega &x, const UnitaryDOmega &y);

  bool is_unitary() const;
  DOmega determinant() const;
  /// j with det U = ω^j, if the determinant is a power of ω.
  std::optional<int> determinant_omega_power() const;

  /// Canonical text of the reduced matrix; equal matrices give equal keys.
  std::string key() const;
  std::string to_string() const;

 private:
  std::array<ZOmega, 4> m_;
  long k_ = 0;
};

enum class Gate : char { H = 'H', S = 'S', T = 'T', X = 'X', W = 'W' };

using GateWord = std::vector<Gate>;

UnitaryDOmega gate_matrix(Gate g);

/// Product of the gate matrices in word order.
UnitaryDOmega evaluate_word(const GateWord &w);

/// Number of T gates.
std::size_t t_count(const GateWord &w);

/// Letters H, S, T, X; each maximal run of j scalar gates W is written
/// "w^j" with j taken mod 8 (runs that are multiples of 8 are dropped).
std::string format_word(const GateWord &w);

/// Inverse of format_word. Also accepts "W", "w", "ω", "w^N", "ω^N" and
/// "ω" with superscript digits; whitespace is ignored. Exponents are
/// reduced mod 8. Throws std::invalid_argument with the offending offset.
GateWord parse_word(const std::string &text);

}  // namespace ctsynth
