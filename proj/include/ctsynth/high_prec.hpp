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

// Arbitrary-precision binary floating point with directed rounding, and
// closed intervals built on it. Every HighPrecReal is an exact dyadic
// rational; rounding only happens inside operations, in the requested
// direction, with MPFR's correct-rounding guarantee.

#pragma once

#include <ostream>
#include <string>
#include <utility>

#include <mpfr.h>

#include "ctsynth/integer.hpp"
#include "ctsynth/ring.hpp"

namespace ctsynth {

using Precision = mpfr_prec_t;

enum class Round { Nearest, Down, Up, TowardZero };

mpfr_rnd_t to_mpfr(Round r);

class HighPrecReal {
 public:
  explicit HighPrecReal(Precision prec = 64);
  HighPrecReal(long v, Precision prec);
  HighPrecReal(const Integer &v, Precision prec, Round r = Round::Nearest);
  HighPrecReal(const Rational &v, Precision prec, Round r = Round::Nearest);
  HighPrecReal(double v, Precision prec);
  /// Decimal or MPFR-style literal.
  HighPrecReal(const std::string &text, Precision prec, Round r = Round::Nearest);

  HighPrecReal(const HighPrecReal &other);
  HighPrecReal(HighPrecReal &&other) noexcept;
  HighPrecReal &operator=(const HighPrecReal &other);
  HighPrecReal &operator=(HighPrecReal &&other) noexcept;
  ~HighPrecReal();

  Precision precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x|/2^e < 1; 0 for zero.
  long exponent() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact value as m·2^e (m odd or zero).
  std::pair<Integer, long> to_dyadic() const;
  Rational to_rational() const;
  Integer floor() const;
  Integer ceil() const;

  std::string to_string(int digits = 20) const;

  friend int compare(const HighPrecReal &x, const HighPrecReal &y) { return mpfr_cmp(x.v_, y.v_); }
  friend bool operator<(const HighPrecReal &x, const HighPrecReal &y) { return compare(x, y) < 0; }
  friend bool operator<=(const HighPrecReal &x, const HighPrecReal &y) { return compare(x, y) <= 0; }
  friend bool operator>(const HighPrecReal &x, const HighPrecReal &y) { return compare(x, y) > 0; }
  friend bool operator>=(const HighPrecReal &x, const HighPrecReal &y) { return compare(x, y) >= 0; }
  friend bool operator==(const HighPrecReal &x, const HighPrecReal &y) { return compare(x, y) == 0; }

 private:
  mpfr_t v_;
};

// Rounded primitives. The result precision is `prec` when given, otherwise
// the larger operand precision.
HighPrecReal add(const HighPrecReal &x, const HighPrecReal &y, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal sub(const HighPrecReal &x, const HighPrecReal &y, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal mul(const HighPrecReal &x, const HighPrecReal &y, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal div(const HighPrecReal &x, const HighPrecReal &y, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal sqrt(const HighPrecReal &x, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal sin(const HighPrecReal &x, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal cos(const HighPrecReal &x, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal log(const HighPrecReal &x, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal log2(const HighPrecReal &x, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal atan2(const HighPrecReal &y, const HighPrecReal &x, Round r = Round::Nearest, Precision prec = 0);
HighPrecReal neg(const HighPrecReal &x);
HighPrecReal abs(const HighPrecReal &x);
/// x·2^e, exact.
HighPrecReal ldexp(const HighPrecReal &x, long e);
HighPrecReal pi(Precision prec, Round r = Round::Nearest);
HighPrecReal sqrt2(Precision prec, Round r = Round::Nearest);
/// a + b√2 rounded in direction r.
HighPrecReal to_real(const ZRootTwo &x, Precision prec, Round r = Round::Nearest);

inline std::ostream &operator<<(std::ostream &os, const HighPrecReal &x) { return os << x.to_string(); }

inline HighPrecReal operator+(const HighPrecReal &x, const HighPrecReal &y) { return add(x, y); }
inline HighPrecReal operator-(const HighPrecReal &x, const HighPrecReal &y) { return sub(x, y); }
inline HighPrecReal operator*(const HighPrecReal &x, const HighPrecReal &y) { return mul(x, y); }
inline HighPrecReal operator/(const HighPrecReal &x, const HighPrecReal &y) { return div(x, y); }
inline HighPrecReal operator-(const HighPrecReal &x) { return neg(x); }

/// Exact sign of (a + b√2) - v.
int compare(const ZRootTwo &x, const HighPrecReal &v);
/// Exact sign of x·v - w.
int compare_scaled(const ZRootTwo &x, const HighPrecReal &v, const HighPrecReal &w);

/// Closed interval [lo, hi] with outward-rounded arithmetic: the true result
/// of each operation on members of the operands lies in the result.
class Interval {
 public:
  Interval() = default;
  Interval(HighPrecReal point) : lo_(point), hi_(std::move(point)) {}
  Interval(HighPrecReal lo, HighPrecReal hi);

  static Interval exact(long v, Precision prec) { return Interval(HighPrecReal(v, prec)); }
  static Interval of(const Rational &q, Precision prec);
  static Interval of(const ZRootTwo &x, Precision prec);
  static Interval pi(Precision prec);
  static Interval sqrt2(Precision prec);

  const HighPrecReal &lo() const { return lo_; }
  const HighPrecReal &hi() const { return hi_; }
  Precision precision() const;
  HighPrecReal mid() const;
  HighPrecReal width() const;
  bool contains(const HighPrecReal &v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  friend Interval operator+(const Interval &x, const Interval &y);
  friend Interval operator-(const Interval &x, const Interval &y);
  friend Interval operator*(const Interval &x, const Interval &y);
  /// Throws std::domain_error if y contains zero.
  friend Interval operator/(const Interval &x, const Interval &y);
  friend Interval operator-(const Interval &x);

  Interval square() const;
  Interval sqrt() const;
  Interval sin() const;
  Interval cos() const;
  Interval log2() const;
  Interval ldexp(long e) const;
  /// Both endpoints re-rounded outward to `prec` bits.
  Interval with_precision(Precision prec) const;

  std::string to_string(int digits = 20) const;

 private:
  HighPrecReal lo_, hi_;
};

/// Complex number with interval parts.
struct ComplexInterval {
  Interval re, im;

  friend ComplexInterval operator+(const ComplexInterval &x, const ComplexInterval &y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexInterval operator-(const ComplexInterval &x, const ComplexInterval &y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexInterval operator*(const ComplexInterval &x, const ComplexInterval &y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  ComplexInterval conj() const { return {re, -im}; }
  Interval abs2() const { return re.square() + im.square(); }
};

/// Enclosure of an element of D[ω] as a complex number.
ComplexInterval enclose(const DOmega &x, Precision prec);
ComplexInterval enclose(const ZOmega &x, Precision prec);

}  // namespace ctsynth
