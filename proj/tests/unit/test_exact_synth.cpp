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

#include <gtest/gtest.h>

#include <unordered_set>

#include "ctsynth/exact_synth.hpp"
#include "sample_word.hpp"
#include "test_util.hpp"

using namespace ctsynth;
using ctsynth::testing::kSampleWord;

namespace {


GateWord random_word(Rng &rng, std::size_t max_len) {
  static const Gate gates[] = {Gate::H, Gate::S, Gate::T, Gate::X, Gate::W};
  const std::size_t len = uniform_below(rng, Integer(static_cast<long>(max_len + 1))).get_ui();
  GateWord w;
  for (std::size_t i = 0; i < len; ++i) {
    // Bias toward T and H so the T-count is substantial.
    const unsigned r = static_cast<unsigned>(rng() % 10);
    w.push_back(r < 4 ? Gate::T : r < 7 ? Gate::H : gates[r - 7 + 1 > 4 ? 4 : r - 7 + 1]);
  }
  return w;
}

}  // namespace

TEST(Unitary, GateIdentities) {
  EXPECT_TRUE(evaluate_word({}) == UnitaryDOmega());
  EXPECT_TRUE(evaluate_word(parse_word("TT")) == gate_matrix(Gate::S));
  EXPECT_TRUE(evaluate_word(parse_word("WWWWWWWW")) == UnitaryDOmega());
  EXPECT_TRUE(evaluate_word(parse_word("HH")) == UnitaryDOmega());
  EXPECT_TRUE(evaluate_word(parse_word("HSSH")) == gate_matrix(Gate::X));
  for (Gate g : {Gate::H, Gate::S, Gate::T, Gate::X, Gate::W}) {
    EXPECT_TRUE(gate_matrix(g).is_unitary());
    EXPECT_TRUE(gate_matrix(g).determinant_omega_power().has_value());
  }
  // (SH)^3 = ω
  EXPECT_TRUE(evaluate_word(parse_word("SHSHSH")) == gate_matrix(Gate::W));
}

TEST(Unitary, EvaluateIsHomomorphism) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    GateWord a = random_word(rng, 40), b = random_word(rng, 40);
    GateWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    ASSERT_TRUE(evaluate_word(ab) == evaluate_word(a) * evaluate_word(b));
    const UnitaryDOmega u = evaluate_word(ab);
    ASSERT_TRUE(u.is_unitary());
    ASSERT_TRUE(u.determinant_omega_power().has_value());
  }
}

TEST(Unitary, NonUnitaryDetected) {
  const UnitaryDOmega m(1, 1, 0, 1, 0);
  EXPECT_FALSE(m.is_unitary());
  EXPECT_THROW(exact_synthesize(m), std::invalid_argument);
}

TEST(GateWordText, FormatAndParse) {
  EXPECT_EQ(format_word(parse_word("H T  S\nX")), "HTSX");
  EXPECT_EQ(format_word(parse_word("HWWW")), "Hw^3");
  EXPECT_EQ(format_word(parse_word("Hw^3")), "Hw^3");
  EXPECT_EQ(format_word(parse_word("H\xCF\x89^2")), "Hw^2");
  EXPECT_EQ(format_word(parse_word("H\xCF\x89\xC2\xB3")), "Hw^3");
  EXPECT_EQ(format_word(parse_word("Hw^11")), "Hw^3");
  EXPECT_EQ(format_word(parse_word("Hw")), "Hw^1");
  EXPECT_EQ(format_word(parse_word("Hw^8")), "H");
  EXPECT_THROW(parse_word("HQ"), std::invalid_argument);
  EXPECT_THROW(parse_word("Hw^"), std::invalid_argument);
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    GateWord w = random_word(rng, 60);
    ASSERT_TRUE(evaluate_word(parse_word(format_word(w))) == evaluate_word(w));
  }
}

TEST(CliffordTable, HasAllCliffords) {
  const CliffordTable &t = CliffordTable::instance();
  std::unordered_set<std::string> keys;
  for (int i = 0; i < CliffordTable::kSize; ++i) {
    ASSERT_TRUE(evaluate_word(t.word(i)) == t.matrix(i));
    ASSERT_EQ(t.find(t.matrix(i)), i);
    ASSERT_EQ(t_count(t.word(i)), 0u);
    keys.insert(t.matrix(i).key());
  }
  EXPECT_EQ(keys.size(), 192u);
  EXPECT_EQ(t.find(UnitaryDOmega()), 0);
  EXPECT_FALSE(t.find(gate_matrix(Gate::T)).has_value());
}

TEST(NormalForm, Examples) {
  const MANormalForm hh = ma_normalize(parse_word("HH"));
  EXPECT_EQ(hh.t_count(), 0u);
  EXPECT_TRUE(hh.body.empty());
  EXPECT_EQ(hh.clifford, 0);

  const MANormalForm tt = ma_normalize(parse_word("TT"));
  EXPECT_EQ(t_count(tt), 0u);
  EXPECT_TRUE(CliffordTable::instance().matrix(tt.clifford) == gate_matrix(Gate::S));

  const MANormalForm t = ma_normalize(parse_word("T"));
  EXPECT_EQ(t.t_count(), 1u);
  EXPECT_TRUE(t.leading_t);
  EXPECT_EQ(format_word(exact_synthesize(gate_matrix(Gate::T))), "T");
  EXPECT_EQ(format_word(exact_synthesize(gate_matrix(Gate::H))), "H");
  EXPECT_EQ(ma_normalize(UnitaryDOmega()).to_string(), "w^0");
}

TEST(NormalForm, ReferenceSampleCrossCheck) {
  const GateWord w = parse_word(kSampleWord);
  EXPECT_EQ(t_count(w), 142u);
  const UnitaryDOmega u = evaluate_word(w);
  ASSERT_TRUE(u.is_unitary());
  const DOmega uhat(parse_zomega("-22067493351ω³-22078644868ω²+52098814989ω+16270802723"), 72);
  const DOmega that(parse_zomega("18093401340ω³-18136198811ω²+7555056984ω+7451734762"), 72);
  EXPECT_TRUE(u.entry(0, 0) == uhat);
  // The reference t̂ sits in the upper-right corner: the sample matrix is
  // [[û, t̂], [-t̂†, û†]], the transpose of the [[u, -t†], [t, u†]] layout.
  EXPECT_TRUE(u.entry(0, 1) == that);
  EXPECT_TRUE(u.entry(1, 0) == -that.dagger());
  EXPECT_EQ(u.least_k(), 72);
  // The sample is already in normal form.
  const MANormalForm nf = ma_normalize(u);
  EXPECT_EQ(nf.t_count(), 142u);
  EXPECT_EQ(nf.to_string(), format_word(parse_word(std::string(kSampleWord))));
}

TEST(NormalForm, EnumerationCountsAreDistinct) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::size_t expected = 192 * (3 * (std::size_t{1} << n) - 2);
    EXPECT_EQ(enumerate_normal_forms(n).size(), expected);
    EXPECT_EQ(count_distinct_normal_forms(n), expected) << n;
  }
}

TEST(NormalForm, NormalizationIsCanonical) {
  for (const MANormalForm &nf : enumerate_normal_forms(3)) {
    ASSERT_EQ(ma_normalize(nf.word()), nf);
  }
}

TEST(ExactSynthesis, RoundTripAndTCountBand) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const GateWord w = random_word(rng, 200);
    const UnitaryDOmega u = evaluate_word(w);
    const GateWord s = exact_synthesize(u);
    ASSERT_TRUE(evaluate_word(s) == u);
    const long k = u.least_k();
    const long n = static_cast<long>(t_count(s));
    ASSERT_LE(n, k == 0 ? 1 : 2 * k);
    ASSERT_GE(n, 2 * k - 3);
    ASSERT_LE(n, static_cast<long>(t_count(w)));
    ASSERT_EQ(ma_normalize(w), ma_normalize(s));
  }
}

TEST(BlochMatrix, TGateHasExponentOne) {
  EXPECT_EQ(BlochMatrix::of(gate_matrix(Gate::T)).k, 1);
  EXPECT_EQ(BlochMatrix::of(gate_matrix(Gate::H)).k, 0);
  EXPECT_EQ(BlochMatrix::of(gate_matrix(Gate::W)).k, 0);
}
