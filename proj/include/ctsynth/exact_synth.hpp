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

// Exact synthesis of Clifford+T operators into Matsumoto-Amano normal form
// (T | ε)(HT | SHT)* C, with C one of the 192 Cliffords (24 up to phase,
// times the 8 phases ω^j).

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctsynth/ring.hpp"
#include "ctsynth/unitary.hpp"

namespace ctsynth {

/// The 192 single-qubit Cliffords. Entry 8c + j is ω^j times the c-th
/// Clifford modulo phase; entry 0 is the identity. Built once by breadth
/// first search over {H, S}, so each class word is a shortest {H, S} word.
class CliffordTable {
 public:
  static const CliffordTable &instance();

  static constexpr int kSize = 192;
  static constexpr int kClasses = 24;

  const UnitaryDOmega &matrix(int index) const { return matrices_.at(index); }
  /// Word for the class of `index` followed by ω^j as W gates.
  GateWord word(int index) const;
  /// {H, S} word of the phase class c.
  const GateWord &class_word(int c) const { return class_words_.at(c); }
  /// Index of an exact Clifford, or nullopt for non-Cliffords.
  std::optional<int> find(const UnitaryDOmega &u) const;

 private:
  CliffordTable();
  std::vector<UnitaryDOmega> matrices_;
  std::vector<GateWord> class_words_;
  std::unordered_map<std::string, int> index_;
};

enum class Syllable { HT, SHT };

struct MANormalForm {
  bool leading_t = false;
  std::vector<Syllable> body;
  int clifford = 0;  // CliffordTable index

  std::size_t t_count() const { return (leading_t ? 1 : 0) + body.size(); }
  /// Expanded gate word; the phase appears as trailing W gates.
  GateWord word() const;
  /// Text form of word(), always ending in "w^j" (j = 0..7).
  std::string to_string() const;

  friend bool operator==(const MANormalForm &, const MANormalForm &) = default;
};

std::size_t t_count(const MANormalForm &nf);

/// Normal form of an exact unitary. Throws std::invalid_argument when u is
/// not unitary.
MANormalForm ma_normalize(const UnitaryDOmega &u);
MANormalForm ma_normalize(const GateWord &w);

/// A Clifford+T word evaluating exactly to u (global phase included), with
/// T-count at most 2·u.least_k(). Throws std::invalid_argument when u is not
/// unitary.
GateWord exact_synthesize(const UnitaryDOmega &u);

/// All normal forms with T-count <= max_t.
std::vector<MANormalForm> enumerate_normal_forms(std::size_t max_t);

/// Number of pairwise distinct matrices among enumerate_normal_forms(max_t).
std::size_t count_distinct_normal_forms(std::size_t max_t);

/// Exact SO(3) Bloch representation R_ij = tr(σ_i U σ_j U†)/2, stored as
/// m/√2^k with entries in Z[√2], row-major.
struct BlochMatrix {
  std::array<ZRootTwo, 9> m;
  long k = 0;

  static BlochMatrix of(const UnitaryDOmega &u);
  BlochMatrix reduce() const;
  BlochMatrix transpose() const;
  friend BlochMatrix operator*(const BlochMatrix &x, const BlochMatrix &y);
};

}  // namespace ctsynth
