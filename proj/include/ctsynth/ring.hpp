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

// Exact arithmetic in Z[√2], Z[i], Z[ω] (ω = e^{iπ/4}) and the dyadic
// ring D[ω] = Z[1/√2, i].

#pragma once

#include <complex>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "ctsynth/integer.hpp"

namespace ctsynth {

class ZOmega;

/// a + b√2.
class ZRootTwo {
 public:
  ZRootTwo() = default;
  ZRootTwo(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  ZRootTwo(long a) : a_(a), b_(0) {}

  const Integer &a() const { return a_; }
  const Integer &b() const { return b_; }

  /// The fundamental unit λ = 1 + √2.
  static ZRootTwo lambda() { return {1, 1}; }
  /// λ^n for any integer n, using λ^-1 = √2 - 1.
  static ZRootTwo lambda_pow(long n);

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// √2-conjugate a - b√2.
  ZRootTwo bullet() const { return {a_, -b_}; }
  /// rN = a² - 2b².
  Integer norm() const { return a_ * a_ - 2 * b_ * b_; }
  /// Exact sign of the real number a + b√2.
  int sign() const;

  ZRootTwo operator-() const { return {-a_, -b_}; }
  friend ZRootTwo operator+(const ZRootTwo &x, const ZRootTwo &y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend ZRootTwo operator-(const ZRootTwo &x, const ZRootTwo &y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend ZRootTwo operator*(const ZRootTwo &x, const ZRootTwo &y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  ZRootTwo &operator+=(const ZRootTwo &y) { return *this = *this + y; }
  ZRootTwo &operator-=(const ZRootTwo &y) { return *this = *this - y; }
  ZRootTwo &operator*=(const ZRootTwo &y) { return *this = *this * y; }

  friend bool operator==(const ZRootTwo &x, const ZRootTwo &y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  /// Ordering of the real values (not lexicographic).
  friend std::strong_ordering operator<=>(const ZRootTwo &x, const ZRootTwo &y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const;
  std::string to_string() const;

 private:
  Integer a_ = 0, b_ = 0;
};

/// Gaussian integer a + bi.
class ZComplex {
 public:
  ZComplex() = default;
  ZComplex(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  ZComplex(long a) : a_(a), b_(0) {}

  const Integer &a() const { return a_; }
  const Integer &b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  ZComplex dagger() const { return {a_, -b_}; }
  /// iN = a² + b².
  Integer norm() const { return a_ * a_ + b_ * b_; }

  ZComplex operator-() const { return {-a_, -b_}; }
  friend ZComplex operator+(const ZComplex &x, const ZComplex &y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend ZComplex operator-(const ZComplex &x, const ZComplex &y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend ZComplex operator*(const ZComplex &x, const ZComplex &y) {
    return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const ZComplex &x, const ZComplex &y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  Integer a_ = 0, b_ = 0;
};

/// aω³ + bω² + cω + d.
class ZOmega {
 public:
  ZOmega() = default;
  ZOmega(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  ZOmega(long d) : d_(d) {}
  ZOmega(const ZRootTwo &x) : a_(-x.b()), c_(x.b()), d_(x.a()) {}
  ZOmega(const ZComplex &x) : b_(x.b()), d_(x.a()) {}

  const Integer &a() const { return a_; }
  const Integer &b() const { return b_; }
  const Integer &c() const { return c_; }
  const Integer &d() const { return d_; }

  static ZOmega omega() { return {0, 0, 1, 0}; }
  /// ω^j for any integer j.
  static ZOmega omega_pow(long j);

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

  /// Complex conjugation: -cω³ - bω² - aω + d.
  ZOmega dagger() const { return {-c_, -b_, -a_, d_}; }
  /// √2-conjugation: -aω³ + bω² - cω + d.
  ZOmega bullet() const { return {-a_, b_, -c_, d_}; }
  /// yN = (a²+b²+c²+d²)² - 2(ab+bc+cd-da)².
  Integer norm() const;

  /// Multiplication by ω^j (a cyclic coefficient shift with sign).
  ZOmega mul_omega_pow(long j) const;
  /// x·√2.
  ZOmega mul_sqrt2() const;
  /// True iff √2 divides this element in Z[ω].
  bool divisible_by_sqrt2() const { return ((a_ - c_) % 2 == 0) && ((b_ - d_) % 2 == 0); }
  /// x/√2; requires divisible_by_sqrt2().
  ZOmega div_sqrt2() const;

  /// The element as a + b√2 when it is real (t = t†).
  std::optional<ZRootTwo> to_root_two() const;
  /// The element as a + bi when it is fixed by •.
  std::optional<ZComplex> to_complex_int() const;

  std::complex<double> to_complex() const;

  ZOmega operator-() const { return {-a_, -b_, -c_, -d_}; }
  friend ZOmega operator+(const ZOmega &x, const ZOmega &y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
  }
  friend ZOmega operator-(const ZOmega &x, const ZOmega &y) {
    return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
  }
  friend ZOmega operator*(const ZOmega &x, const ZOmega &y);
  ZOmega &operator+=(const ZOmega &y) { return *this = *this + y; }
  ZOmega &operator-=(const ZOmega &y) { return *this = *this - y; }
  ZOmega &operator*=(const ZOmega &y) { return *this = *this * y; }
  friend bool operator==(const ZOmega &x, const ZOmega &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  std::string to_string() const;

 private:
  Integer a_ = 0, b_ = 0, c_ = 0, d_ = 0;
};

/// num / √2^k with k >= 0; k is not necessarily least.
class DOmega {
 public:
  DOmega() = default;
  DOmega(ZOmega num, long k = 0);
  DOmega(long n) : num_(n), k_(0) {}

  const ZOmega &num() const { return num_; }
  long k() const { return k_; }

  /// Same value with the least exponent k' <= k.
  DOmega reduce() const;
  /// Same value written with exponent k >= this->k().
  ZOmega num_at(long k) const;

  DOmega dagger() const { return {num_.dagger(), k_}; }
  DOmega bullet() const;
  bool is_zero() const { return num_.is_zero(); }

  DOmega operator-() const { return {-num_, k_}; }
  friend DOmega operator+(const DOmega &x, const DOmega &y);
  friend DOmega operator-(const DOmega &x, const DOmega &y);
  friend DOmega operator*(const DOmega &x, const DOmega &y) { return {x.num_ * y.num_, x.k_ + y.k_}; }
  /// Value equality (cross-multiplied to a common exponent).
  friend bool operator==(const DOmega &x, const DOmega &y);

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  ZOmega num_;
  long k_ = 0;
};

std::ostream &operator<<(std::ostream &os, const ZRootTwo &x);
std::ostream &operator<<(std::ostream &os, const ZComplex &x);
std::ostream &operator<<(std::ostream &os, const ZOmega &x);
std::ostream &operator<<(std::ostream &os, const DOmega &x);

// ---------------------------------------------------------------------------
// Norms. Multiplicative; zero iff the argument is zero; ±1 iff a unit.

inline Integer norm(const Integer &t) { return t; }
inline Integer norm(const ZRootTwo &t) { return t.norm(); }
inline Integer norm(const ZComplex &t) { return t.norm(); }
inline Integer norm(const ZOmega &t) { return t.norm(); }

// ---------------------------------------------------------------------------
// Euclidean division: s = q·t + r with |N(r)| <= 9/16 |N(t)|. Coefficients of
// the exact quotient are rounded to nearest, ties toward even. Throws
// std::domain_error when t == 0.

template <typename R>
struct DivMod {
  R quotient;
  R remainder;
};

DivMod<Integer> euclid_divmod(const Integer &s, const Integer &t);
DivMod<ZRootTwo> euclid_divmod(const ZRootTwo &s, const ZRootTwo &t);
DivMod<ZComplex> euclid_divmod(const ZComplex &s, const ZComplex &t);
DivMod<ZOmega> euclid_divmod(const ZOmega &s, const ZOmega &t);

inline bool is_zero(const Integer &x) { return x == 0; }
inline bool is_zero(const ZRootTwo &x) { return x.is_zero(); }
inline bool is_zero(const ZComplex &x) { return x.is_zero(); }
inline bool is_zero(const ZOmega &x) { return x.is_zero(); }

/// Greatest common divisor by Euclid's algorithm. Unique up to a unit; in Z
/// the result is non-negative. Throws std::domain_error for gcd(0, 0).
template <typename R>
R gcd(R s, R t) {
  if (is_zero(s) && is_zero(t)) throw std::domain_error("gcd(0, 0) is undefined");
  while (!is_zero(t)) {
    R r = euclid_divmod(s, t).remainder;
    s = std::move(t);
    t = std::move(r);
  }
  return s;
}
template <>
Integer gcd<Integer>(Integer s, Integer t);

/// Exact quotient s/t if t divides s, otherwise nullopt.
std::optional<ZRootTwo> divide_exact(const ZRootTwo &s, const ZRootTwo &t);
std::optional<ZOmega> divide_exact(const ZOmega &s, const ZOmega &t);

// ---------------------------------------------------------------------------
// Units of Z[√2]: exactly the elements (-1)^n (√2-1)^k.

struct UnitExponents {
  int n = 0;   // sign exponent, 0 or 1
  long k = 0;  // power of √2 - 1
  friend bool operator==(const UnitExponents &, const UnitExponents &) = default;
};

/// Writes a unit as (-1)^n (√2-1)^k. Throws std::invalid_argument when
/// |rN(u)| != 1.
UnitExponents unit_decompose(const ZRootTwo &u);
/// Inverse of unit_decompose.
ZRootTwo unit_compose(const UnitExponents &e);
/// v with v² = u when u >= 0 and u• >= 0, otherwise nullopt. Throws
/// std::invalid_argument when u is not a unit.
std::optional<ZRootTwo> unit_sqrt(const ZRootTwo &u);

// ---------------------------------------------------------------------------
// Text forms: "a+b√2", "a+bi", "aω³+bω²+cω+d", "(num)/√2^k". The parsers also
// accept "sqrt2" for √2 and "w", "w^2", "w^3" for the powers of ω, and ignore
// whitespace. They throw std::invalid_argument on malformed input.

ZRootTwo parse_zroottwo(const std::string &text);
ZComplex parse_zcomplex(const std::string &text);
ZOmega parse_zomega(const std::string &text);
DOmega parse_domega(const std::string &text);

}  // namespace ctsynth
