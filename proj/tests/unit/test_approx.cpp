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

#include <cmath>

#include "ctsynth/approx.hpp"
#include "ctsynth/diophantine.hpp"
#include "ctsynth/exact_synth.hpp"

using namespace ctsynth;

namespace {

Rational eps(const char *s) { return parse_decimal(s); }

/// ⌈5/2 + 2·log2(1+√2) + 2·log2(1/ε)⌉ evaluated in floating point at 256
/// bits, as an oracle for the exact integer decision.
long k_by_logs(const Rational &e) {
  const Precision p = 256;
  HighPrecReal lam = add(HighPrecReal(1L, p), sqrt2(p));
  HighPrecReal c = add(HighPrecReal(Rational(5, 2), p), ldexp(log2(lam), 1));
  HighPrecReal v = sub(c, ldexp(log2(HighPrecReal(e, p)), 1));
  return v.ceil().get_si();
}

void expect_valid_candidate(const Candidate &c, const EpsilonProblem &prob) {
  // u = α + βi, α = a + b√2, β = c + d√2 with u = (d-b)ω³ + cω² + (b+d)ω + a.
  const Integer a = c.u.d(), cc = c.u.b();
  EXPECT_TRUE(is_odd(Integer(a + cc)));
  ZRootTwo uu = *(c.u.dagger() * c.u).to_root_two();
  EXPECT_EQ(c.xi, ZRootTwo(pow2(c.k)) - uu);
  EXPECT_TRUE(NormEquationInstance::of(c.xi).well_formed());
  EXPECT_EQ(c.p, c.xi.norm());
  EXPECT_TRUE(region_contains(enclose(DOmega(c.u, c.k), prob.prec), prob));
  EXPECT_GE(c.xi.sign(), 0);
  EXPECT_GE(c.xi.bullet().sign(), 0);
}

}  // namespace

TEST(Approx, DenominatorExponentTable) {
  EXPECT_EQ(min_denominator_exponent(eps("1e-10")), 72);
  EXPECT_EQ(min_denominator_exponent(eps("1e-20")), 138);
  EXPECT_EQ(min_denominator_exponent(eps("1e-30")), 205);
  EXPECT_EQ(min_denominator_exponent(eps("1e-50")), 338);
  EXPECT_EQ(min_denominator_exponent(eps("1e-100")), 670);
  EXPECT_EQ(min_denominator_exponent(Rational(1, 2)), 8);
}

TEST(Approx, DenominatorExponentMatchesLogs) {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    Rational e(static_cast<long>(rng() % 1000000) + 1, 2000000L << (rng() % 40));
    e.canonicalize();
    EXPECT_EQ(min_denominator_exponent(e), k_by_logs(e)) << e.get_str();
  }
}

TEST(Approx, SlotCount) {
  EXPECT_EQ(slot_count(Rational(1, 2)), 11);
  // ⌊4√2·10^10⌋ = ⌊56568542494.92...⌋
  EXPECT_EQ(slot_count(eps("1e-10")), Integer("56568542494"));
  EXPECT_EQ(slot_count(Rational(1, 10)), 56);
}

TEST(Approx, WorkingPrecision) {
  EXPECT_EQ(working_precision(8), 64);
  EXPECT_EQ(working_precision(72), 176);
}

TEST(Approx, EpsilonRange) {
  AngleExpr th = parse_angle("pi/4");
  EXPECT_THROW(make_problem(th, Rational(0)), std::invalid_argument);
  EXPECT_THROW(make_problem(th, Rational(-1, 10)), std::invalid_argument);
  EXPECT_THROW(make_problem(th, Rational(3, 5)), std::invalid_argument);
  EXPECT_NO_THROW(make_problem(th, Rational(1, 2)));
}

TEST(Approx, ProblemGeometry) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    Rational th(static_cast<long>(rng() % 200001) - 100000, 1000);
    th.canonicalize();
    Rational e(static_cast<long>(rng() % 500) + 1, 1000L << (rng() % 30));
    e.canonicalize();
    EpsilonProblem p = make_problem(AngleExpr::number(th), e);
    // y_max - y_min >= ε/√2, and z is within 45° of the positive x-axis.
    HighPrecReal width = sub(p.y_max.lo(), p.y_min.hi(), Round::Down);
    HighPrecReal bound = div(HighPrecReal(e, p.prec), sqrt2(p.prec));
    EXPECT_GE(width, bound);
    EXPECT_GE(p.zx.lo().to_double(), std::cos(M_PI / 8) - 1e-9);
    EXPECT_LE(p.slot_lo, p.slot_hi);
  }
}

TEST(Approx, QuarterTurns) {
  EXPECT_EQ(make_problem(parse_angle("0"), Rational(1, 10)).quarter_turns, 0);
  EXPECT_EQ(make_problem(parse_angle("pi"), Rational(1, 10)).quarter_turns, 2);
  EXPECT_EQ(make_problem(parse_angle("-pi/2"), Rational(1, 10)).quarter_turns, 7);
  EXPECT_EQ(make_problem(parse_angle("5*pi/2+0.1"), Rational(1, 10)).quarter_turns, 5);
}

TEST(Approx, RegionContains) {
  EpsilonProblem p = make_problem(parse_angle("0"), Rational(2, 5));
  // û = z.
  EXPECT_TRUE(region_contains(Rational(1), Rational(0), p));
  // û = (1 - ε²)z: dot product 1 - ε² < 1 - ε²/2.
  EXPECT_FALSE(region_contains(Rational(1) - Rational(4, 25), Rational(0), p));
  // (24/25, 7/25) is on the unit circle with dot product 1 - ε²/4 = 24/25.
  EXPECT_TRUE(region_contains(Rational(24, 25), Rational(7, 25), p));
  EXPECT_TRUE(region_contains(Rational(24, 25), Rational(-7, 25), p));
  EXPECT_FALSE(region_contains(Rational(24, 25), Rational(8, 25), p));
  // Left edge 1 - ε²/2 = 0.92: just right of it is inside, just left is not.
  EXPECT_TRUE(region_contains(Rational(23, 25) + Rational(1, 1000000), Rational(0), p));
  EXPECT_FALSE(region_contains(Rational(23, 25) - Rational(1, 1000000), Rational(0), p));
}

TEST(Approx, CandidatesAreValid) {
  EpsilonProblem p = make_problem(parse_angle("pi/4"), Rational(1, 10));
  Rng rng(21);
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    std::optional<Candidate> c = random_candidate(p, rng);
    if (!c) continue;
    ++ok;
    expect_valid_candidate(*c, p);
    EXPECT_LT(c->slot, p.n);
  }
  EXPECT_GE(ok, 190);
}

TEST(Approx, CandidatesAcrossAngles) {
  Rng rng(22);
  for (const char *th : {"0", "pi", "-3*pi/4", "100", "pi/128", "1e-9"}) {
    for (const char *e : {"0.3", "1e-5", "1e-30"}) {
      EpsilonProblem p = make_problem(parse_angle(th), eps(e));
      int ok = 0;
      for (int i = 0; i < 40; ++i)
        if (auto c = random_candidate(p, rng)) {
          ++ok;
          expect_valid_candidate(*c, p);
        }
      EXPECT_GE(ok, 38) << th << " " << e;
    }
  }
}

TEST(Approx, BelowMinimalExponentLosesGuarantee) {
  const Rational e(1, 10);
  const long k = min_denominator_exponent(e) - 3;
  // The β window has δΔ = 2^k·ε²·√2/8·2 < (1+√2)² once k drops by 3.
  double delta_Delta = std::ldexp(1.0, static_cast<int>(k)) * 0.01 * std::sqrt(2.0) / 4;
  EXPECT_LT(delta_Delta, (1 + std::sqrt(2.0)) * (1 + std::sqrt(2.0)));
  EpsilonProblem p = make_problem(parse_angle("pi/4"), e, k);
  Rng rng(4);
  int ok = 0;
  for (int i = 0; i < 200; ++i)
    if (auto c = random_candidate(p, rng)) {
      ++ok;
      expect_valid_candidate(*c, p);
    }
  EXPECT_LT(ok, 200);
}

TEST(Approx, RotationAtReferenceScale) {
  Rng rng(1);
  RzApproximation r = approximate_rz(parse_angle("pi/128"), eps("1e-10"), rng);
  EXPECT_EQ(r.stats.k_initial, 72);
  EXPECT_TRUE(r.u.is_unitary());
  EXPECT_EQ(*r.u.determinant_omega_power(), 0);
  EXPECT_EQ(evaluate_word(r.word), r.u);
  EXPECT_LE(r.stats.t_count, 144u);
  EXPECT_EQ(r.stats.t_count, t_count(r.word));
  EXPECT_LE(r.stats.error_bound.to_double(), 1e-10);
  // Independent check through singular values at higher precision.
  Matrix2 rz = rz_matrix(parse_angle("pi/128").enclose(400));
  HighPrecReal d = spectral_norm_upper(Matrix2::of(r.u, 400) - rz);
  EXPECT_LE(d, HighPrecReal(eps("1e-10"), 400, Round::Down));
  EXPECT_GE(r.stats.candidates_tried, 1u);
}

TEST(Approx, RotationAtTwentyDigits) {
  Rng rng(2);
  RzApproximation r = approximate_rz(parse_angle("pi/128"), eps("1e-20"), rng);
  EXPECT_LE(r.stats.t_count, 278u);
  EXPECT_LE(r.stats.error_bound, HighPrecReal(eps("1e-20"), 256, Round::Down));
  EXPECT_EQ(evaluate_word(r.word), r.u);
}

TEST(Approx, CoarseRotations) {
  Rng rng(3);
  for (const char *th : {"0", "pi", "-pi", "7*pi/4", "100", "-2.5", "pi/2", "3*pi/2"}) {
    for (const char *e : {"0.4", "0.5", "1e-3"}) {
      RzApproximation r = approximate_rz(parse_angle(th), eps(e), rng);
      EXPECT_LE(r.stats.error_bound, HighPrecReal(eps(e), 128, Round::Down)) << th << " " << e;
      EXPECT_EQ(evaluate_word(r.word), r.u);
      HighPrecReal d = spectral_norm_upper(Matrix2::of(r.u, 200) - rz_matrix(parse_angle(th).enclose(200)));
      EXPECT_LE(d, HighPrecReal(eps(e), 200, Round::Down)) << th << " " << e;
      EXPECT_LE(r.stats.t_count, static_cast<std::size_t>(2 * r.stats.k));
    }
  }
}

TEST(Approx, DeterministicForSeed) {
  Rng a(77), b(77);
  RzApproximation x = approximate_rz(parse_angle("pi/128"), eps("1e-15"), a);
  RzApproximation y = approximate_rz(parse_angle("pi/128"), eps("1e-15"), b);
  EXPECT_EQ(x.word, y.word);
  EXPECT_EQ(x.stats.candidates_tried, y.stats.candidates_tried);
  EXPECT_EQ(x.stats.slot_failures, y.stats.slot_failures);
}

TEST(Approx, ParallelWorkers) {
  Rng rng(8);
  SynthLimits lim;
  lim.workers = 4;
  for (int i = 0; i < 5; ++i) {
    RzApproximation r = approximate_rz(parse_angle("pi/128"), eps("1e-20"), rng, lim);
    EXPECT_LE(r.stats.error_bound, HighPrecReal(eps("1e-20"), 256, Round::Down));
    EXPECT_EQ(evaluate_word(r.word), r.u);
  }
}

TEST(Approx, LimitsExhausted) {
  SynthLimits lim;
  lim.max_candidates_per_k = 1;
  lim.max_escalations = 0;
  int thrown = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    try {
      approximate_rz(parse_angle("pi/128"), eps("1e-30"), rng, lim);
    } catch (const SynthesisError &e) {
      ++thrown;
      EXPECT_EQ(e.stats().k, e.stats().k_initial);
      EXPECT_LE(e.stats().candidates_tried + e.stats().slot_failures, 1u);
    }
  }
  EXPECT_GT(thrown, 20);
}

TEST(Approx, EscalationRaisesK) {
  SynthLimits lim;
  lim.max_candidates_per_k = 1;
  lim.max_escalations = 3;
  bool escalated = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    try {
      RzApproximation r = approximate_rz(parse_angle("pi/128"), eps("1e-30"), rng, lim);
      EXPECT_GE(r.stats.k, r.stats.k_initial);
      EXPECT_LE(r.stats.k, r.stats.k_initial + 3);
      escalated |= r.stats.k > r.stats.k_initial;
      EXPECT_LE(r.stats.error_bound, HighPrecReal(eps("1e-30"), 256, Round::Down));
    } catch (const SynthesisError &e) {
      EXPECT_EQ(e.stats().k, e.stats().k_initial + 3);
    }
  }
  EXPECT_TRUE(escalated);
}

TEST(Approx, Su2ZRotationTarget) {
  // Rz(0.3): the γ = δ = 0 branch.
  Interval th = Interval::of(Rational(3, 10), 200);
  Matrix2 target = rz_matrix(th);
  Rng rng(5);
  Su2Approximation r = approximate_su2(target, Rational(1, 1000), rng);
  EXPECT_LE(r.error_bound.to_double(), 1e-3);
  EXPECT_LT(std::abs(r.gamma.to_double()), 1e-30);
  EXPECT_EQ(r.stats[1].candidates_tried, 0u);
  EXPECT_EQ(r.stats[2].candidates_tried, 0u);
  EXPECT_EQ(evaluate_word(r.word), r.u);
}

TEST(Approx, Su2XRotationTarget) {
  // Rx(0.7) = H·Rz(0.7)·H: β = δ = 0.
  const Precision p = 200;
  Interval half = Interval::of(Rational(7, 20), p);
  Interval c = half.cos(), s = half.sin(), z = Interval::exact(0, p);
  Matrix2 target{{ComplexInterval{c, z}, ComplexInterval{z, -s}, ComplexInterval{z, -s},
                  ComplexInterval{c, z}}};
  Rng rng(6);
  Su2Approximation r = approximate_su2(target, Rational(1, 1000), rng);
  EXPECT_LE(r.error_bound.to_double(), 1e-3);
  EXPECT_LT(std::abs(r.beta.to_double()), 1e-30);
  EXPECT_LT(std::abs(r.delta.to_double()), 1e-30);
  EXPECT_NEAR(r.gamma.to_double(), 0.7, 1e-15);
  EXPECT_EQ(r.stats[0].candidates_tried, 0u);
  EXPECT_EQ(r.stats[2].candidates_tried, 0u);
}

TEST(Approx, Su2RandomTargets) {
  Rng rng(12);
  const Precision p = 256;
  for (int i = 0; i < 10; ++i) {
    // Euler-angle sample Rz(x)·Rx(y)·Rz(w) built numerically.
    auto angle = [&] { return Interval::of(Rational(static_cast<long>(rng() % 6283), 1000), p); };
    Matrix2 h = Matrix2::of(evaluate_word(parse_word("H")), p);
    Matrix2 target = rz_matrix(angle()) * h * rz_matrix(angle()) * h * rz_matrix(angle());
    const Rational e = i < 5 ? Rational(1, 1000) : eps("1e-10");
    Su2Approximation r = approximate_su2(target, e, rng);
    EXPECT_LE(r.error_bound, HighPrecReal(e, p, Round::Down));
    EXPECT_EQ(evaluate_word(r.word), r.u);
    // Each rotation contributes at most 2k_i T gates.
    std::size_t bound = 0;
    for (const SynthStats &s : r.stats) bound += 2 * static_cast<std::size_t>(s.k);
    EXPECT_LE(t_count(r.word), bound);
    EXPECT_LE(static_cast<double>(t_count(r.word)), 56 + 12 * std::log2(1 / e.get_d()));
  }
}

// Constant K = 36 in T-count ≤ K + 12·log2(1/ε) for SU(2) targets.
TEST(Approx, Su2ConstantThirtySix) {
  Rng rng(13);
  const Precision p = 256;
  double worst = -1e300;
  for (int i = 0; i < 10; ++i) {
    auto angle = [&] { return Interval::of(Rational(static_cast<long>(rng() % 6283), 1000), p); };
    Matrix2 h = Matrix2::of(evaluate_word(parse_word("H")), p);
    Matrix2 target = rz_matrix(angle()) * h * rz_matrix(angle()) * h * rz_matrix(angle());
    const Rational e = eps("1e-10");
    Su2Approximation r = approximate_su2(target, e, rng);
    worst = std::max(worst, static_cast<double>(t_count(r.word)) - 12 * std::log2(1 / e.get_d()));
  }
  EXPECT_LE(worst, 36) << "largest observed K";
}

TEST(Approx, Su2RejectsNonUnitary) {
  Matrix2 m = Matrix2::parse({"1", "1", "0", "1"}, 128);
  Rng rng(1);
  EXPECT_THROW(approximate_su2(m, Rational(1, 10), rng), std::invalid_argument);
  Matrix2 phase = Matrix2::parse({"0,1", "0", "0", "0,1"}, 128);
  EXPECT_THROW(approximate_su2(phase, Rational(1, 10), rng), std::invalid_argument);
}
