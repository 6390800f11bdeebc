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

#include "ctsynth/exact_synth.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ctsynth {

// ------------------------------------------------------------ BlochMatrix

namespace {

using Mat2 = std::array<ZOmega, 4>;

Mat2 mul(const Mat2 &a, const Mat2 &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2 dagger(const Mat2 &a) { return {a[0].dagger(), a[2].dagger(), a[1].dagger(), a[3].dagger()}; }

const std::array<Mat2, 3> &paulis() {
  static const ZOmega i(0, 1, 0, 0);
  static const std::array<Mat2, 3> p{Mat2{0, 1, 1, 0}, Mat2{0, -i, i, 0}, Mat2{1, 0, 0, -1}};
  return p;
}

bool divisible_by_sqrt2(const ZRootTwo &x) { return is_even(x.a()); }
ZRootTwo div_sqrt2(const ZRootTwo &x) { return {x.b(), x.a() / 2}; }  // (a + b√2)/√2 = b + (a/2)√2

}  // namespace

BlochMatrix BlochMatrix::of(const UnitaryDOmega &u) {
  const Mat2 n{u.num(0, 0), u.num(0, 1), u.num(1, 0), u.num(1, 1)};
  const Mat2 nd = dagger(n);
  BlochMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Mat2 p = mul(mul(paulis()[i], n), mul(paulis()[j], nd));
      auto tr = (p[0] + p[3]).to_root_two();
      if (!tr) throw std::logic_error("BlochMatrix: non-real trace");
      r.m[3 * i + j] = *tr;
    }
  // tr(...)/2 with U = N/√2^k gives tr(σ N σ N†)/√2^(2k+2).
  r.k = 2 * u.k() + 2;
  return r.reduce();
}

BlochMatrix BlochMatrix::reduce() const {
  BlochMatrix r = *this;
  auto divisible = [&] {
    for (const ZRootTwo &x : r.m)
      if (!divisible_by_sqrt2(x)) return false;
    return true;
  };
  while (r.k > 0 && divisible()) {
    for (ZRootTwo &x : r.m) x = div_sqrt2(x);
    --r.k;
  }
  return r;
}

BlochMatrix BlochMatrix::transpose() const {
  BlochMatrix r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[3 * i + j] = m[3 * j + i];
  return r;
}

BlochMatrix operator*(const BlochMatrix &x, const BlochMatrix &y) {
  BlochMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ZRootTwo s;
      for (int l = 0; l < 3; ++l) s += x.m[3 * i + l] * y.m[3 * l + j];
      r.m[3 * i + j] = s;
    }
  r.k = x.k + y.k;
  return r.reduce();
}

// ---------------------------------------------------------- CliffordTable

namespace {

std::string class_key(const UnitaryDOmega &u) {
  std::string best;
  for (int j = 0; j < 8; ++j) {
    std::string k = u.mul_omega_pow(j).key();
    if (j == 0 || k < best) best = k;
  }
  return best;
}

}  // namespace

const CliffordTable &CliffordTable::instance() {
  static const CliffordTable table;
  return table;
}

CliffordTable::CliffordTable() {
  std::vector<UnitaryDOmega> class_matrices;
  std::unordered_set<std::string> seen_elements, seen_classes;
  std::deque<std::pair<UnitaryDOmega, GateWord>> queue{{UnitaryDOmega(), GateWord{}}};
  seen_elements.insert(UnitaryDOmega().key());
  while (!queue.empty()) {
    auto [m, w] = queue.front();
    queue.pop_front();
    if (seen_classes.insert(class_key(m)).second) {
      class_matrices.push_back(m);
      class_words_.push_back(w);
    }
    for (Gate g : {Gate::H, Gate::S}) {
      UnitaryDOmega n = m * gate_matrix(g);
      if (seen_elements.insert(n.key()).second) {
        GateWord nw = w;
        nw.push_back(g);
        queue.emplace_back(std::move(n), std::move(nw));
      }
    }
  }
  if (class_matrices.size() != kClasses || seen_elements.size() != kSize)
    throw std::logic_error("CliffordTable: unexpected group size");
  for (int c = 0; c < kClasses; ++c)
    for (int j = 0; j < 8; ++j) {
      matrices_.push_back(class_matrices[c].mul_omega_pow(j).reduce());
      index_.emplace(matrices_.back().key(), 8 * c + j);
    }
}

GateWord CliffordTable::word(int index) const {
  GateWord w = class_words_.at(index / 8);
  w.insert(w.end(), static_cast<std::size_t>(index % 8), Gate::W);
  return w;
}

std::optional<int> CliffordTable::find(const UnitaryDOmega &u) const {
  auto it = index_.find(u.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ------------------------------------------------------------ normal form

GateWord MANormalForm::word() const {
  GateWord w;
  if (leading_t) w.push_back(Gate::T);
  for (Syllable s : body) {
    if (s == Syllable::SHT) w.push_back(Gate::S);
    w.push_back(Gate::H);
    w.push_back(Gate::T);
  }
  const GateWord c = CliffordTable::instance().word(clifford);
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

std::string MANormalForm::to_string() const {
  GateWord w = word();
  while (!w.empty() && w.back() == Gate::W) w.pop_back();
  return format_word(w) + "w^" + std::to_string(clifford % 8);
}

std::size_t t_count(const MANormalForm &nf) { return nf.t_count(); }

namespace {

struct SyllableData {
  UnitaryDOmega inverse;
  BlochMatrix bloch_inverse;
};

// Index 0: T, 1: HT, 2: SHT.
const std::array<SyllableData, 3> &syllables() {
  static const std::array<SyllableData, 3> data = [] {
    std::array<SyllableData, 3> d;
    const GateWord words[3] = {{Gate::T}, {Gate::H, Gate::T}, {Gate::S, Gate::H, Gate::T}};
    for (int i = 0; i < 3; ++i) {
      const UnitaryDOmega u = evaluate_word(words[i]);
      d[i] = {u.dagger(), BlochMatrix::of(u).transpose()};
    }
    return d;
  }();
  return data;
}

}  // namespace

MANormalForm ma_normalize(const UnitaryDOmega &u) {
  if (!u.is_unitary()) throw std::invalid_argument("ma_normalize: matrix is not unitary");
  MANormalForm nf;
  UnitaryDOmega rest = u.reduce();
  BlochMatrix bloch = BlochMatrix::of(rest);
  // Peel one syllable at a time from the left; exactly one choice lowers
  // the Bloch denominator exponent, which equals the remaining T-count.
  for (bool first = true; bloch.k > 0; first = false) {
    int chosen = -1;
    BlochMatrix next;
    for (int s = first ? 0 : 1; s < 3; ++s) {
      BlochMatrix cand = syllables()[s].bloch_inverse * bloch;
      if (cand.k == bloch.k - 1) {
        if (chosen >= 0) throw std::logic_error("ma_normalize: ambiguous syllable");
        chosen = s;
        next = std::move(cand);
      }
    }
    if (chosen < 0) throw std::logic_error("ma_normalize: no syllable reduces the exponent");
    if (chosen == 0)
      nf.leading_t = true;
    else
      nf.body.push_back(chosen == 1 ? Syllable::HT : Syllable::SHT);
    rest = syllables()[chosen].inverse * rest;
    bloch = std::move(next);
  }
  auto c = CliffordTable::instance().find(rest);
  if (!c) throw std::logic_error("ma_normalize: residue is not a Clifford");
  nf.clifford = *c;
  return nf;
}

MANormalForm ma_normalize(const GateWord &w) { return ma_normalize(evaluate_word(w)); }

GateWord exact_synthesize(const UnitaryDOmega &u) { return ma_normalize(u).word(); }

std::vector<MANormalForm> enumerate_normal_forms(std::size_t max_t) {
  std::vector<MANormalForm> out;
  // Bodies of each length, grown breadth-first.
  std::vector<std::vector<Syllable>> bodies{{}};
  for (std::size_t len = 0; len <= max_t; ++len) {
    for (const auto &body : bodies) {
      for (bool lead : {false, true}) {
        if (body.size() + (lead ? 1 : 0) > max_t) continue;
        for (int c = 0; c < CliffordTable::kSize; ++c) out.push_back({lead, body, c});
      }
    }
    std::vector<std::vector<Syllable>> longer;
    for (const auto &body : bodies)
      for (Syllable s : {Syllable::HT, Syllable::SHT}) {
        longer.push_back(body);
        longer.back().push_back(s);
      }
    bodies = std::move(longer);
  }
  return out;
}

std::size_t count_distinct_normal_forms(std::size_t max_t) {
  std::unordered_set<std::string> keys;
  for (const MANormalForm &nf : enumerate_normal_forms(max_t)) keys.insert(evaluate_word(nf.word()).key());
  return keys.size();
}

}  // namespace ctsynth
