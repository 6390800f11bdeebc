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

#include "ctsynth/ring.hpp"
#include "test_util.hpp"

using namespace ctsynth;
using namespace ctsynth::testing;

namespace {

const ZOmega kOmega = ZOmega::omega();
const ZOmega kI{0, 1, 0, 0};

template <typename R>
bool remainder_ok(const R &s, const R &t) {
  auto [q, r] = euclid_divmod(s, t);
  Integer nr = norm(r), nt = norm(t);
  if (nr < 0) nr = -nr;
  if (nt < 0) nt = -nt;
  return s == q * t + r && 16 * nr <= 9 * nt;
}

}  // namespace

TEST(Conjugation, DaggerExamples) {
  EXPECT_EQ(ZOmega(1).dagger(), ZOmega(1));
  EXPECT_EQ(kOmega.dagger(), ZOmega(-1, 0, 0, 0));  // ω† = -ω³
  EXPECT_EQ(kI.dagger(), -kI);
}

TEST(Conjugation, BulletExamples) {
  EXPECT_EQ(kOmega.bullet(), -kOmega);
  EXPECT_EQ(ZRootTwo(1, 1).bullet(), ZRootTwo(1, -1));
  EXPECT_EQ(ZOmega(ZRootTwo(1, 1)).bullet(), ZOmega(ZRootTwo(1, -1)));
  EXPECT_EQ(ZOmega(5).bullet(), ZOmega(5));
}

TEST(Norm, Examples) {
  EXPECT_EQ(ZRootTwo(3, 1).norm() * ZRootTwo(3, -1).norm(), 49);
  EXPECT_EQ(ZRootTwo(7).norm(), 49);
  EXPECT_EQ(ZComplex(3, 4).norm(), 25);
  EXPECT_EQ(kOmega.norm(), 1);
  EXPECT_EQ(ZOmega(0).norm(), 0);
}

TEST(EuclidDivmod, Examples) {
  auto [q, r] = euclid_divmod(ZRootTwo(7), ZRootTwo(3, 1));
  EXPECT_EQ(q, ZRootTwo(3, -1));
  EXPECT_TRUE(r.is_zero());

  auto z = euclid_divmod(Integer(5), Integer(2));
  EXPECT_TRUE(z.quotient == 2 || z.quotient == 3);
  EXPECT_LE(abs(z.remainder), 1);

  // h + i against ξ = 5+2√2 (h = 4 is a square root of -1 mod 17).
  EXPECT_TRUE(remainder_ok(ZOmega(0, 1, 0, 4), ZOmega(ZRootTwo(5, 2))));
  EXPECT_THROW(euclid_divmod(ZOmega(1), ZOmega(0)), std::domain_error);
}

TEST(EuclidDivmod, NineSixteenthsIsAttained) {
  // s/t = (ω³ + ω² - ω)/2: every coefficient is a tie, all round to 0.
  const ZOmega s(1, 1, -1, 0), t(2);
  auto [q, r] = euclid_divmod(s, t);
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(norm(r) * 16, norm(t) * 9);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(ctsynth::gcd(Integer(12), Integer(18)), 6);
  EXPECT_EQ(ctsynth::gcd(Integer(-12), Integer(18)), 6);
  const ZOmega t(2, -1, 0, 3);
  const ZOmega g0 = gcd(ZOmega(0), t);
  EXPECT_TRUE(divide_exact(g0, t) && divide_exact(t, g0));
  // 5 = (2+i)(2-i)
  const ZComplex g = gcd(ZComplex(5), ZComplex(2, 1));
  EXPECT_EQ(abs(g.norm()), 5);
  EXPECT_TRUE(divide_exact(ZOmega(g), ZOmega(ZComplex(2, 1))));
  EXPECT_TRUE(divide_exact(ZOmega(ZComplex(2, 1)), ZOmega(g)));
  EXPECT_THROW(gcd(ZOmega(0), ZOmega(0)), std::domain_error);
}

TEST(Units, DecomposeExamples) {
  EXPECT_EQ(unit_decompose(ZRootTwo(1)), (UnitExponents{0, 0}));
  EXPECT_EQ(unit_decompose(ZRootTwo(-1, 1)), (UnitExponents{0, 1}));
  EXPECT_EQ(unit_decompose(ZRootTwo(1, 1)), (UnitExponents{0, -1}));
  EXPECT_EQ(unit_decompose(ZRootTwo(-1)), (UnitExponents{1, 0}));
  EXPECT_THROW(unit_decompose(ZRootTwo(3, 1)), std::invalid_argument);
}

TEST(Units, SqrtExamples) {
  EXPECT_EQ(unit_sqrt(ZRootTwo(1)), ZRootTwo(1));
  EXPECT_EQ(unit_sqrt(ZRootTwo(3, 2)), ZRootTwo(1, 1));
  EXPECT_FALSE(unit_sqrt(ZRootTwo(-1, 1)).has_value());
  EXPECT_FALSE(unit_sqrt(ZRootTwo(-1)).has_value());
  EXPECT_THROW(unit_sqrt(ZRootTwo(2)), std::invalid_argument);
}

TEST(Units, RoundTripRandom) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const UnitExponents e{static_cast<int>(rng() & 1), uniform_between(rng, -64, 64).get_si()};
    const ZRootTwo u = unit_compose(e);
    EXPECT_EQ(unit_decompose(u), e);
    EXPECT_EQ(unit_compose(unit_decompose(u)), u);
    auto v = unit_sqrt(u);
    EXPECT_EQ(v.has_value(), u.sign() > 0 && u.bullet().sign() > 0);
    if (v) EXPECT_EQ(*v * *v, u);
  }
}

TEST(RingProperties, NormMultiplicative) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t bits = 1 + i % 64;
    auto a = rand_zroottwo(rng, bits), b = rand_zroottwo(rng, bits);
    ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
    auto c = rand_zcomplex(rng, bits), d = rand_zcomplex(rng, bits);
    ASSERT_EQ((c * d).norm(), c.norm() * d.norm());
    auto s = rand_zomega(rng, bits), t = rand_zomega(rng, bits);
    ASSERT_EQ((s * t).norm(), s.norm() * t.norm());
    ASSERT_GE(s.norm(), 0);
    auto x = rand_big(rng, bits), y = rand_big(rng, bits);
    ASSERT_EQ(norm(Integer(x * y)), norm(x) * norm(y));
  }
}

TEST(RingProperties, EuclideanRemainderBound) {
  Rng rng(2);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t bits = 1 + i % 48, tbits = 1 + (i * 7) % 40;
    Integer si = rand_big(rng, bits), ti = rand_big(rng, tbits);
    if (ti != 0) ASSERT_TRUE(remainder_ok(si, ti));
    auto sr = rand_zroottwo(rng, bits), tr = rand_zroottwo(rng, tbits);
    if (!tr.is_zero()) ASSERT_TRUE(remainder_ok(sr, tr)) << sr << " " << tr;
    auto sc = rand_zcomplex(rng, bits), tc = rand_zcomplex(rng, tbits);
    if (!tc.is_zero()) ASSERT_TRUE(remainder_ok(sc, tc));
    auto so = rand_zomega(rng, bits), to = rand_zomega(rng, tbits);
    if (!to.is_zero()) ASSERT_TRUE(remainder_ok(so, to)) << so << " " << to;
  }
}

TEST(RingProperties, ConjugationsAreCommutingInvolutiveHomomorphisms) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    auto s = rand_zomega(rng, 20), t = rand_zomega(rng, 20);
    ASSERT_EQ(s.dagger().dagger(), s);
    ASSERT_EQ(s.bullet().bullet(), s);
    ASSERT_EQ(s.dagger().bullet(), s.bullet().dagger());
    ASSERT_EQ((s * t).dagger(), s.dagger() * t.dagger());
    ASSERT_EQ((s + t).dagger(), s.dagger() + t.dagger());
    ASSERT_EQ((s * t).bullet(), s.bullet() * t.bullet());
    ASSERT_EQ((s + t).bullet(), s.bullet() + t.bullet());
  }
}

TEST(RingProperties, FixedPointsOfConjugations) {
  Rng rng(4);
  for (int i = 0; i < 2000; ++i) {
    ZOmega s = rand_zomega(rng, 3);
    ASSERT_EQ(s.to_root_two().has_value(), s == s.dagger());
    ASSERT_EQ(s.to_complex_int().has_value(), s == s.bullet());
    const bool in_z = s.b() == 0 && s.a() == 0 && s.c() == 0;
    ASSERT_EQ(in_z, s == s.dagger() && s == s.bullet());
    // Symmetrized elements always land in the subrings.
    ASSERT_TRUE((s + s.dagger()).to_root_two().has_value());
    ASSERT_TRUE((s * s.bullet()).to_complex_int().has_value());
  }
  const ZRootTwo r(3, -5);
  EXPECT_EQ(ZOmega(r).to_root_two(), r);
}

TEST(RingProperties, GaussianEmbeddingIsHomomorphism) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    auto a = rand_zcomplex(rng, 30), b = rand_zcomplex(rng, 30);
    ASSERT_EQ(ZOmega(a * b), ZOmega(a) * ZOmega(b));
    ASSERT_EQ(ZOmega(a + b), ZOmega(a) + ZOmega(b));
    auto x = rand_zroottwo(rng, 30), y = rand_zroottwo(rng, 30);
    ASSERT_EQ(ZOmega(x * y), ZOmega(x) * ZOmega(y));
  }
}

TEST(RingProperties, GcdDividesBoth) {
  Rng rng(6);
  for (int i = 0; i < 2000; ++i) {
    auto s = rand_zomega(rng, 12), t = rand_zomega(rng, 12), c = rand_zomega(rng, 6);
    s = s * c;
    t = t * c;
    if (s.is_zero() && t.is_zero()) continue;
    const ZOmega g = gcd(s, t);
    ASSERT_TRUE(divide_exact(s, g).has_value());
    ASSERT_TRUE(divide_exact(t, g).has_value());
    if (!c.is_zero()) ASSERT_TRUE(divide_exact(g, c).has_value());
    auto x = rand_zroottwo(rng, 20), y = rand_zroottwo(rng, 20);
    if (x.is_zero() && y.is_zero()) continue;
    const ZRootTwo h = gcd(x, y);
    ASSERT_TRUE(divide_exact(x, h).has_value());
    ASSERT_TRUE(divide_exact(y, h).has_value());
  }
}

TEST(DOmega, ReduceIsIdempotentAndValuePreserving) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    ZOmega n = rand_zomega(rng, 16);
    const long extra = static_cast<long>(rng() % 6);
    for (long j = 0; j < extra; ++j) n = n.mul_sqrt2();
    const DOmega x(n, static_cast<long>(rng() % 10));
    const DOmega r = x.reduce();
    ASSERT_TRUE(r == x);
    ASSERT_LE(r.k(), x.k());
    ASSERT_EQ(r.reduce().num(), r.num());
    ASSERT_EQ(r.reduce().k(), r.k());
    if (r.k() > 0) ASSERT_FALSE(r.num().divisible_by_sqrt2());
  }
}

TEST(DOmega, ClosedUnderArithmetic) {
  const DOmega h(ZOmega(1), 1);  // 1/√2
  EXPECT_TRUE(h * h == DOmega(ZOmega(1), 2));
  EXPECT_TRUE(h + h == DOmega(ZOmega(ZRootTwo(0, 1))));  // 2/√2 = √2
  EXPECT_TRUE((h - h).is_zero());
}

TEST(TextForms, RoundTrip) {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    auto x = rand_zroottwo(rng, 40);
    ASSERT_EQ(parse_zroottwo(x.to_string()), x) << x.to_string();
    auto c = rand_zcomplex(rng, 40);
    ASSERT_EQ(parse_zcomplex(c.to_string()), c) << c.to_string();
    auto o = rand_zomega(rng, 40);
    ASSERT_EQ(parse_zomega(o.to_string()), o) << o.to_string();
    const DOmega d(o, static_cast<long>(rng() % 20));
    const DOmega back = parse_domega(d.to_string());
    ASSERT_EQ(back.num(), d.num());
    ASSERT_EQ(back.k(), d.k());
  }
  EXPECT_EQ(parse_zomega("w^3 - 2 w + 1"), ZOmega(1, 0, -2, 1));
  EXPECT_EQ(parse_zroottwo("3 - sqrt2"), ZRootTwo(3, -1));
  EXPECT_THROW(parse_zroottwo("3 +"), std::invalid_argument);
  EXPECT_THROW(parse_zomega("x"), std::invalid_argument);
}
