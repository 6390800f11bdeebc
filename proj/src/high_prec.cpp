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

#include "ctsynth/high_prec.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ctsynth {

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::Down:
      return MPFR_RNDD;
    case Round::Up:
      return MPFR_RNDU;
    case Round::TowardZero:
      return MPFR_RNDZ;
    case Round::Nearest:
      break;
  }
  return MPFR_RNDN;
}

namespace {

Precision checked(Precision p) {
  if (p < MPFR_PREC_MIN || p > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
  return p;
}

Precision pick(Precision requested, const HighPrecReal &x) {
  return requested > 0 ? requested : x.precision();
}

Precision pick(Precision requested, const HighPrecReal &x, const HighPrecReal &y) {
  return requested > 0 ? requested : std::max(x.precision(), y.precision());
}

}  // namespace

// -------------------------------------------------------------- HighPrecReal

HighPrecReal::HighPrecReal(Precision prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_zero(v_, 1);
}

HighPrecReal::HighPrecReal(long v, Precision prec) : HighPrecReal(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }

HighPrecReal::HighPrecReal(const Integer &v, Precision prec, Round r) : HighPrecReal(prec) {
  mpfr_set_z(v_, v.get_mpz_t(), to_mpfr(r));
}

HighPrecReal::HighPrecReal(const Rational &v, Precision prec, Round r) : HighPrecReal(prec) {
  mpfr_set_q(v_, v.get_mpq_t(), to_mpfr(r));
}

HighPrecReal::HighPrecReal(double v, Precision prec) : HighPrecReal(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }

HighPrecReal::HighPrecReal(const std::string &text, Precision prec, Round r) : HighPrecReal(prec) {
  if (mpfr_set_str(v_, text.c_str(), 10, to_mpfr(r)) != 0 && !mpfr_number_p(v_))
    throw std::invalid_argument("not a number: '" + text + "'");
}

HighPrecReal::HighPrecReal(const HighPrecReal &other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HighPrecReal::HighPrecReal(HighPrecReal &&other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

HighPrecReal &HighPrecReal::operator=(const HighPrecReal &other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HighPrecReal &HighPrecReal::operator=(HighPrecReal &&other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

HighPrecReal::~HighPrecReal() { mpfr_clear(v_); }

long HighPrecReal::exponent() const { return is_zero() || !is_finite() ? 0 : mpfr_get_exp(v_); }

std::pair<Integer, long> HighPrecReal::to_dyadic() const {
  if (!is_finite()) throw std::domain_error("to_dyadic: non-finite value");
  if (is_zero()) return {Integer(0), 0};
  Integer m;
  long e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  const mp_bitcnt_t tz = mpz_scan1(m.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), tz);
    e += static_cast<long>(tz);
  }
  return {m, e};
}

Rational HighPrecReal::to_rational() const {
  auto [m, e] = to_dyadic();
  Rational q;
  if (e >= 0)
    q = Rational(m * pow2(static_cast<std::size_t>(e)), 1);
  else
    q = Rational(m, pow2(static_cast<std::size_t>(-e)));
  q.canonicalize();
  return q;
}

Integer HighPrecReal::floor() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

Integer HighPrecReal::ceil() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
  return z;
}

std::string HighPrecReal::to_string(int digits) const {
  char *buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

HighPrecReal add(const HighPrecReal &x, const HighPrecReal &y, Round r, Precision prec) {
  HighPrecReal z(pick(prec, x, y));
  mpfr_add(z.get(), x.get(), y.get(), to_mpfr(r));
  return z;
}

HighPrecReal sub(const HighPrecReal &x, const HighPrecReal &y, Round r, Precision prec) {
  HighPrecReal z(pick(prec, x, y));
  mpfr_sub(z.get(), x.get(), y.get(), to_mpfr(r));
  return z;
}

HighPrecReal mul(const HighPrecReal &x, const HighPrecReal &y, Round r, Precision prec) {
  HighPrecReal z(pick(prec, x, y));
  mpfr_mul(z.get(), x.get(), y.get(), to_mpfr(r));
  return z;
}

HighPrecReal div(const HighPrecReal &x, const HighPrecReal &y, Round r, Precision prec) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  HighPrecReal z(pick(prec, x, y));
  mpfr_div(z.get(), x.get(), y.get(), to_mpfr(r));
  return z;
}

HighPrecReal sqrt(const HighPrecReal &x, Round r, Precision prec) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative value");
  HighPrecReal z(pick(prec, x));
  mpfr_sqrt(z.get(), x.get(), to_mpfr(r));
  return z;
}

HighPrecReal sin(const HighPrecReal &x, Round r, Precision prec) {
  HighPrecReal z(pick(prec, x));
  mpfr_sin(z.get(), x.get(), to_mpfr(r));
  return z;
}

HighPrecReal cos(const HighPrecReal &x, Round r, Precision prec) {
  HighPrecReal z(pick(prec, x));
  mpfr_cos(z.get(), x.get(), to_mpfr(r));
  return z;
}

HighPrecReal log(const HighPrecReal &x, Round r, Precision prec) {
  if (x.sign() <= 0) throw std::domain_error("log of non-positive value");
  HighPrecReal z(pick(prec, x));
  mpfr_log(z.get(), x.get(), to_mpfr(r));
  return z;
}

HighPrecReal log2(const HighPrecReal &x, Round r, Precision prec) {
  if (x.sign() <= 0) throw std::domain_error("log2 of non-positive value");
  HighPrecReal z(pick(prec, x));
  mpfr_log2(z.get(), x.get(), to_mpfr(r));
  return z;
}

HighPrecReal atan2(const HighPrecReal &y, const HighPrecReal &x, Round r, Precision prec) {
  HighPrecReal z(pick(prec, x, y));
  mpfr_atan2(z.get(), y.get(), x.get(), to_mpfr(r));
  return z;
}

HighPrecReal neg(const HighPrecReal &x) {
  HighPrecReal z(x.precision());
  mpfr_neg(z.get(), x.get(), MPFR_RNDN);
  return z;
}

HighPrecReal abs(const HighPrecReal &x) {
  HighPrecReal z(x.precision());
  mpfr_abs(z.get(), x.get(), MPFR_RNDN);
  return z;
}

HighPrecReal ldexp(const HighPrecReal &x, long e) {
  HighPrecReal z(x.precision());
  mpfr_mul_2si(z.get(), x.get(), e, MPFR_RNDN);
  return z;
}

HighPrecReal pi(Precision prec, Round r) {
  HighPrecReal z(prec);
  mpfr_const_pi(z.get(), to_mpfr(r));
  return z;
}

HighPrecReal sqrt2(Precision prec, Round r) {
  HighPrecReal z(prec);
  mpfr_sqrt_ui(z.get(), 2, to_mpfr(r));
  return z;
}

HighPrecReal to_real(const ZRootTwo &x, Precision prec, Round r) {
  // Evaluate with an interval at extra precision, then round the enclosure.
  const Precision work = prec + 32 + static_cast<Precision>(mpz_sizeinbase(x.a().get_mpz_t(), 2) +
                                                            mpz_sizeinbase(x.b().get_mpz_t(), 2));
  Interval v = Interval::of(x, work);
  HighPrecReal z(prec);
  if (r == Round::Down)
    mpfr_set(z.get(), v.lo().get(), MPFR_RNDD);
  else if (r == Round::Up)
    mpfr_set(z.get(), v.hi().get(), MPFR_RNDU);
  else
    mpfr_set(z.get(), v.mid().get(), to_mpfr(r));
  return z;
}

int compare(const ZRootTwo &x, const HighPrecReal &v) {
  auto [m, e] = v.to_dyadic();
  if (e >= 0) return ZRootTwo(x.a() - m * pow2(static_cast<std::size_t>(e)), x.b()).sign();
  const Integer s = pow2(static_cast<std::size_t>(-e));
  return ZRootTwo(x.a() * s - m, x.b() * s).sign();
}

int compare_scaled(const ZRootTwo &x, const HighPrecReal &v, const HighPrecReal &w) {
  auto [mv, ev] = v.to_dyadic();
  auto [mw, ew] = w.to_dyadic();
  if (mv == 0) ev = ew;
  if (mw == 0) ew = ev;
  const long e0 = std::min(ev, ew);
  const Integer sv = mv * pow2(static_cast<std::size_t>(ev - e0));
  const Integer sw = mw * pow2(static_cast<std::size_t>(ew - e0));
  return ZRootTwo(x.a() * sv - sw, x.b() * sv).sign();
}

// ------------------------------------------------------------------ Interval

Interval::Interval(HighPrecReal lo, HighPrecReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::of(const Rational &q, Precision prec) {
  return {HighPrecReal(q, prec, Round::Down), HighPrecReal(q, prec, Round::Up)};
}

Interval Interval::of(const ZRootTwo &x, Precision prec) {
  Interval a(HighPrecReal(x.a(), prec, Round::Down), HighPrecReal(x.a(), prec, Round::Up));
  if (x.b() == 0) return a;
  Interval b(HighPrecReal(x.b(), prec, Round::Down), HighPrecReal(x.b(), prec, Round::Up));
  return a + b * sqrt2(prec);
}

Interval Interval::pi(Precision prec) {
  return {ctsynth::pi(prec, Round::Down), ctsynth::pi(prec, Round::Up)};
}

Interval Interval::sqrt2(Precision prec) {
  return {ctsynth::sqrt2(prec, Round::Down), ctsynth::sqrt2(prec, Round::Up)};
}

Precision Interval::precision() const { return std::max(lo_.precision(), hi_.precision()); }

HighPrecReal Interval::mid() const { return ctsynth::ldexp(add(lo_, hi_, Round::Nearest, precision() + 1), -1); }

HighPrecReal Interval::width() const { return sub(hi_, lo_, Round::Up); }

Interval operator+(const Interval &x, const Interval &y) {
  return {add(x.lo_, y.lo_, Round::Down), add(x.hi_, y.hi_, Round::Up)};
}

Interval operator-(const Interval &x, const Interval &y) {
  return {sub(x.lo_, y.hi_, Round::Down), sub(x.hi_, y.lo_, Round::Up)};
}

Interval operator-(const Interval &x) { return {neg(x.hi_), neg(x.lo_)}; }

Interval operator*(const Interval &x, const Interval &y) {
  const HighPrecReal *a[2] = {&x.lo_, &x.hi_};
  const HighPrecReal *b[2] = {&y.lo_, &y.hi_};
  HighPrecReal lo = mul(*a[0], *b[0], Round::Down), hi = mul(*a[0], *b[0], Round::Up);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      HighPrecReal l = mul(*a[i], *b[j], Round::Down), h = mul(*a[i], *b[j], Round::Up);
      if (l < lo) lo = std::move(l);
      if (h > hi) hi = std::move(h);
    }
  return {lo, hi};
}

Interval operator/(const Interval &x, const Interval &y) {
  if (y.contains_zero()) throw std::domain_error("Interval division by an interval containing zero");
  const HighPrecReal *a[2] = {&x.lo_, &x.hi_};
  const HighPrecReal *b[2] = {&y.lo_, &y.hi_};
  HighPrecReal lo = div(*a[0], *b[0], Round::Down), hi = div(*a[0], *b[0], Round::Up);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      HighPrecReal l = div(*a[i], *b[j], Round::Down), h = div(*a[i], *b[j], Round::Up);
      if (l < lo) lo = std::move(l);
      if (h > hi) hi = std::move(h);
    }
  return {lo, hi};
}

Interval Interval::square() const {
  if (lo_.sign() >= 0) return {mul(lo_, lo_, Round::Down), mul(hi_, hi_, Round::Up)};
  if (hi_.sign() <= 0) return {mul(hi_, hi_, Round::Down), mul(lo_, lo_, Round::Up)};
  HighPrecReal a = mul(lo_, lo_, Round::Up), b = mul(hi_, hi_, Round::Up);
  return {HighPrecReal(0L, precision()), a > b ? a : b};
}

Interval Interval::sqrt() const {
  if (hi_.sign() < 0) throw std::domain_error("Interval sqrt of negative interval");
  HighPrecReal l = lo_.sign() > 0 ? ctsynth::sqrt(lo_, Round::Down) : HighPrecReal(0L, precision());
  return {l, ctsynth::sqrt(hi_, Round::Up)};
}

namespace {

using Fn = HighPrecReal (*)(const HighPrecReal &, Round, Precision);

// Range of sin or cos over [lo, hi]. `deriv` is the derivative (cos or
// -sin). Endpoint values bound the range unless an interior critical point
// exists, detected by a sign change (or uncertain sign) of the derivative.
Interval trig_range(const Interval &x, Fn f, Fn deriv_fn, bool negate_deriv) {
  const Precision p = x.precision();
  HighPrecReal one(1L, p), minus_one(-1L, p);
  HighPrecReal w = x.width();
  if (w > HighPrecReal(3L, p)) return {minus_one, one};
  HighPrecReal flo_d = f(x.lo(), Round::Down, p), flo_u = f(x.lo(), Round::Up, p);
  HighPrecReal fhi_d = f(x.hi(), Round::Down, p), fhi_u = f(x.hi(), Round::Up, p);
  HighPrecReal lo = flo_d < fhi_d ? flo_d : fhi_d;
  HighPrecReal hi = flo_u > fhi_u ? flo_u : fhi_u;
  auto deriv_sign = [&](const HighPrecReal &v) {
    HighPrecReal dd = deriv_fn(v, Round::Down, p), du = deriv_fn(v, Round::Up, p);
    if (negate_deriv) std::swap(dd, du), dd = neg(dd), du = neg(du);
    if (dd.sign() > 0) return 1;
    if (du.sign() < 0) return -1;
    return 0;
  };
  const int s0 = deriv_sign(x.lo()), s1 = deriv_sign(x.hi());
  if (s0 == 1 && s1 == 1) return {lo, hi};
  if (s0 == -1 && s1 == -1) return {lo, hi};
  if (s0 == 1 && s1 == -1) return {lo, one};
  if (s0 == -1 && s1 == 1) return {minus_one, hi};
  // Derivative too close to zero at an endpoint: widen conservatively.
  if (hi.sign() >= 0) hi = one;
  if (lo.sign() <= 0) lo = minus_one;
  return {lo, hi};
}

HighPrecReal sin_fn(const HighPrecReal &x, Round r, Precision p) { return sin(x, r, p); }
HighPrecReal cos_fn(const HighPrecReal &x, Round r, Precision p) { return cos(x, r, p); }

}  // namespace

Interval Interval::sin() const { return trig_range(*this, sin_fn, cos_fn, false); }

Interval Interval::cos() const { return trig_range(*this, cos_fn, sin_fn, true); }

Interval Interval::log2() const {
  return {ctsynth::log2(lo_, Round::Down), ctsynth::log2(hi_, Round::Up)};
}

Interval Interval::ldexp(long e) const { return {ctsynth::ldexp(lo_, e), ctsynth::ldexp(hi_, e)}; }

Interval Interval::with_precision(Precision prec) const {
  HighPrecReal l(prec), h(prec);
  mpfr_set(l.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(h.get(), hi_.get(), MPFR_RNDU);
  return {l, h};
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

ComplexInterval enclose(const ZOmega &x, Precision prec) {
  const Interval inv_sqrt2 = Interval::sqrt2(prec).ldexp(-1);
  auto of = [&](const Integer &v) { return Interval::of(Rational(v), prec); };
  // ω = (1+i)/√2, ω² = i, ω³ = (-1+i)/√2.
  Interval re = of(x.d()) + of(Integer(x.c() - x.a())) * inv_sqrt2;
  Interval im = of(x.b()) + of(Integer(x.c() + x.a())) * inv_sqrt2;
  return {re, im};
}

ComplexInterval enclose(const DOmega &x, Precision prec) {
  ComplexInterval z = enclose(x.num(), prec);
  const long k = x.k();
  if (k % 2) {
    const Interval inv_sqrt2 = Interval::sqrt2(prec).ldexp(-1);
    z = {z.re * inv_sqrt2, z.im * inv_sqrt2};
  }
  return {z.re.ldexp(-(k / 2)), z.im.ldexp(-(k / 2))};
}

}  // namespace ctsynth
