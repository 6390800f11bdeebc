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

#include <algorithm>
#include <cmath>

#include "ctsynth/grid.hpp"
#include "test_util.hpp"

using namespace ctsynth;
using namespace ctsynth::testing;

namespace {

const QRootTwo kSqrt2 = QRootTwo::sqrt2();
const QRootTwo kLambda{1, 1};

bool in_list(const std::vector<ZRootTwo> &v, const ZRootTwo &x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Random dyadic in [-2^mag, 2^mag] with 20 fractional bits.
Rational rand_dyadic(Rng &rng, std::size_t mag) {
  Rational q(rand_big(rng, mag + 20), pow2(20));
  q.canonicalize();
  return q;
}

// Positive dyadic width of roughly 2^e.
Rational width_near(Rng &rng, long e) {
  Integer m = uniform_between(rng, Integer(1) << 20, Integer(1) << 21);
  Rational q = e >= 20 ? Rational(m * pow2(static_cast<std::size_t>(e - 20)))
                       : Rational(m, pow2(static_cast<std::size_t>(20 - e)));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Grid, SharpFourSolutionBox) {
  const GridProblem gp{0, kLambda, -kSqrt2, 1};
  auto all = count_solutions_bruteforce(gp, 4);
  ASSERT_EQ(all.size(), 4u);
  for (const ZRootTwo &x : {ZRootTwo(0), ZRootTwo(1), ZRootTwo(0, 1), ZRootTwo(1, 1)}) EXPECT_TRUE(in_list(all, x));
  auto sol = solve_grid(gp);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(in_list(all, *sol));
}

TEST(Grid, UnitSquare) {
  const GridProblem gp{0, 1, 0, 1};
  auto all = count_solutions_bruteforce(gp, 4);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(in_list(all, ZRootTwo(0)));
  EXPECT_TRUE(in_list(all, ZRootTwo(1)));
  if (auto sol = solve_grid(gp)) EXPECT_TRUE(in_list(all, *sol));
}

TEST(Grid, SmallInnerSquareHasNoSolution) {
  const GridProblem gp{Rational(1, 10), Rational(9, 10), Rational(1, 10), Rational(9, 10)};
  EXPECT_TRUE(count_solutions_bruteforce(gp, 4).empty());
  EXPECT_FALSE(solve_grid(gp));
}

TEST(Grid, GuaranteedSquare) {
  const GridProblem gp{10, 14, 10, 14};
  ASSERT_TRUE(gp.guaranteed());
  EXPECT_TRUE(gp.contains(ZRootTwo(12, 1)));  // frozen oracle from enumeration
  auto sol = solve_grid(gp);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(gp.contains(*sol));
  EXPECT_TRUE(in_list(count_solutions_bruteforce(gp, 20), *sol));
}

TEST(Grid, ShrunkSharpBoxIsEmpty) {
  const Rational e(1, 1000);
  const GridProblem gp{e, kLambda - e, -kSqrt2 + e, QRootTwo(1) - e};
  EXPECT_TRUE(count_solutions_bruteforce(gp, -1).empty());
  EXPECT_FALSE(solve_grid(gp));
}

TEST(Grid, DegenerateAndEmpty) {
  EXPECT_FALSE(solve_grid(GridProblem{1, 0, 0, 1}));
  auto point = solve_grid(GridProblem{kLambda, kLambda, QRootTwo(1, -1), QRootTwo(1, -1)});
  ASSERT_TRUE(point);
  EXPECT_EQ(*point, ZRootTwo(1, 1));
}

TEST(GridParity, Examples) {
  const GridProblem gp{0, 4, -2, 2};
  auto even = solve_grid_parity(gp, Parity::Even);
  ASSERT_TRUE(even);
  EXPECT_TRUE(is_even(even->a()));
  EXPECT_TRUE(gp.contains(*even));
  EXPECT_TRUE(gp.contains(ZRootTwo(0)));
  auto odd = solve_grid_parity(gp, Parity::Odd);
  ASSERT_TRUE(odd);
  EXPECT_TRUE(is_odd(odd->a()));
  EXPECT_TRUE(gp.contains(*odd));
  EXPECT_TRUE(gp.contains(ZRootTwo(1)));

  const QRootTwo x0 = kSqrt2 * QRootTwo(1000000);
  const GridProblem far{x0, x0 + 4, -2, 2};
  auto sol = solve_grid_parity(far, Parity::Odd);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(is_odd(sol->a()));
  EXPECT_TRUE(far.contains(*sol));
}

TEST(GridProperties, GuaranteedRegimeAlwaysSolved) {
  Rng rng(1);
  const QRootTwo threshold{3, 2};
  for (int i = 0; i < 10000; ++i) {
    const long e = static_cast<long>(uniform_between(rng, -30, 30).get_si());
    const Rational delta = width_near(rng, e);
    // Δ = (1+√2)²/δ rounded up to a dyadic, then stretched a little.
    Rational Delta = width_near(rng, 3 - e);
    while (compare(QRootTwo(delta * Delta), threshold) < 0) Delta *= Rational(17, 16);
    QRootTwo x0(rand_dyadic(rng, 30)), y0(rand_dyadic(rng, 30));
    if (i % 3 == 0) x0 = x0 + kSqrt2 * QRootTwo(rand_dyadic(rng, 10));
    const GridProblem gp{x0, x0 + delta, y0, y0 + Delta};
    ASSERT_TRUE(gp.guaranteed());
    GridStats stats;
    auto sol = solve_grid(gp, &stats);
    ASSERT_TRUE(sol) << i;
    ASSERT_TRUE(gp.contains(*sol));
    // O(|log δ|) rescaling steps.
    ASSERT_LE(stats.rescale_steps, std::abs(e) * 0.8 + 3);
    if ((delta + Delta) < 64) ASSERT_TRUE(in_list(count_solutions_bruteforce(gp, -1), *sol));
  }
}

TEST(GridProperties, NarrowBoxesHaveAtMostOneSolution) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const long e = static_cast<long>(uniform_between(rng, -6, 6).get_si());
    const Rational delta = width_near(rng, e);
    Rational Delta = width_near(rng, -e - 2);
    while (delta * Delta >= 1) Delta /= 2;
    QRootTwo x0(rand_dyadic(rng, 8)), y0(rand_dyadic(rng, 8));
    const GridProblem gp{x0, x0 + delta, y0, y0 + Delta};
    ASSERT_LE(count_solutions_bruteforce(gp, -1).size(), 1u);
  }
}

TEST(GridProperties, ParityRespected) {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const long e = static_cast<long>(uniform_between(rng, -20, 20).get_si());
    const Rational delta = width_near(rng, e);
    Rational Delta = width_near(rng, 4 - e);
    while (compare(QRootTwo(delta * Delta), QRootTwo(6, 4)) < 0) Delta *= 2;
    QRootTwo x0(rand_dyadic(rng, 20)), y0(rand_dyadic(rng, 20));
    const GridProblem gp{x0, x0 + delta, y0, y0 + Delta};
    for (Parity par : {Parity::Even, Parity::Odd}) {
      auto sol = solve_grid_parity(gp, par);
      ASSERT_TRUE(sol);
      ASSERT_TRUE(gp.contains(*sol));
      ASSERT_EQ(is_odd(sol->a()), par == Parity::Odd);
    }
  }
}

TEST(GridProperties, RescalingInvariance) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const Rational delta = width_near(rng, 2), Delta = width_near(rng, 2);
    QRootTwo x0(rand_dyadic(rng, 10)), y0(rand_dyadic(rng, 10));
    const GridProblem gp{x0, x0 + delta, y0, y0 + Delta};
    const long n = static_cast<long>(uniform_between(rng, -7, 7).get_si());
    const GridProblem scaled = gp.rescale(n);
    auto a = solve_grid(gp);
    auto b = solve_grid(scaled);
    ASSERT_TRUE(a && b);
    ASSERT_TRUE(scaled.contains(ZRootTwo::lambda_pow(n) * *a));
    ASSERT_TRUE(gp.contains(ZRootTwo::lambda_pow(-n) * *b));
  }
}

TEST(QRootTwo, FloorIsExact) {
  EXPECT_EQ(QRootTwo(0, 1).floor(), 1);
  EXPECT_EQ(QRootTwo(0, -1).floor(), -2);
  EXPECT_EQ(QRootTwo(Rational(-1, 2), Rational(1, 2)).floor(), 0);
  // 3 - 2√2 ≈ 0.1716
  EXPECT_EQ(QRootTwo(3, -2).floor(), 0);
  EXPECT_EQ(QRootTwo(3, -2).ceil(), 1);
  // λ^40 + λ^-40 is an integer; subtracting λ^-40 leaves a value just below it.
  const ZRootTwo big = ZRootTwo::lambda_pow(40);
  const ZRootTwo tr = big + big.bullet();
  EXPECT_EQ(QRootTwo(big).floor(), tr.a() - 1);
}
