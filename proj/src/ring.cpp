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

#include "ctsynth/ring.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ctsynth {

namespace {

int sgn(const Integer &x) { return mpz_sgn(x.get_mpz_t()); }

// Appends "+n" / "-n" followed by a unit suffix.
void append_term(std::string &out, const Integer &coeff, const char *unit, bool first) {
  if (coeff < 0)
    out += "-";
  else if (!first)
    out += "+";
  Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
  out += mag.get_str();
  out += unit;
}

}  // namespace

// ----------------------------------------------------------------- ZRootTwo

ZRootTwo ZRootTwo::lambda_pow(long n) {
  ZRootTwo base = n >= 0 ? ZRootTwo(1, 1) : ZRootTwo(-1, 1);
  unsigned long e = static_cast<unsigned long>(n >= 0 ? n : -n);
  ZRootTwo result(1);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

int ZRootTwo::sign() const {
  const int sa = sgn(a_), sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a² with 2b².
  const int c = sgn(Integer(a_ * a_ - 2 * b_ * b_));
  return sa > 0 ? c : -c;
}

double ZRootTwo::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string ZRootTwo::to_string() const {
  std::string s;
  append_term(s, a_, "", true);
  append_term(s, b_, "√2", false);
  return s;
}

// ----------------------------------------------------------------- ZComplex

std::string ZComplex::to_string() const {
  std::string s;
  append_term(s, a_, "", true);
  append_term(s, b_, "i", false);
  return s;
}

// ------------------------------------------------------------------- ZOmega

ZOmega ZOmega::omega_pow(long j) { return ZOmega(1).mul_omega_pow(j); }

Integer ZOmega::norm() const {
  Integer sq = a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_;
  Integer cross = a_ * b_ + b_ * c_ + c_ * d_ - d_ * a_;
  return sq * sq - 2 * cross * cross;
}

ZOmega ZOmega::mul_omega_pow(long j) const {
  long r = ((j % 8) + 8) % 8;
  ZOmega x = *this;
  if (r >= 4) {
    x = -x;
    r -= 4;
  }
  for (long i = 0; i < r; ++i) x = ZOmega(x.b_, x.c_, x.d_, -x.a_);
  return x;
}

ZOmega ZOmega::mul_sqrt2() const { return {b_ - d_, c_ + a_, d_ + b_, c_ - a_}; }

ZOmega ZOmega::div_sqrt2() const {
  if (!divisible_by_sqrt2()) throw std::domain_error("ZOmega::div_sqrt2: not divisible");
  ZOmega y = mul_sqrt2();
  return {y.a_ / 2, y.b_ / 2, y.c_ / 2, y.d_ / 2};
}

std::optional<ZRootTwo> ZOmega::to_root_two() const {
  if (b_ != 0 || a_ != -c_) return std::nullopt;
  return ZRootTwo(d_, c_);
}

std::optional<ZComplex> ZOmega::to_complex_int() const {
  if (a_ != 0 || c_ != 0) return std::nullopt;
  return ZComplex(d_, b_);
}

std::complex<double> ZOmega::to_complex() const {
  const double h = std::sqrt(0.5);
  // ω = (1+i)/√2, ω² = i, ω³ = (-1+i)/√2.
  const double re = d_.get_d() + (c_.get_d() - a_.get_d()) * h;
  const double im = b_.get_d() + (c_.get_d() + a_.get_d()) * h;
  return {re, im};
}

ZOmega operator*(const ZOmega &x, const ZOmega &y) {
  // Coefficients indexed by power of ω, reduced with ω⁴ = -1.
  const std::array<const Integer *, 4> p{&x.d_, &x.c_, &x.b_, &x.a_};
  const std::array<const Integer *, 4> q{&y.d_, &y.c_, &y.b_, &y.a_};
  std::array<Integer, 4> z{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (*p[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (i + j < 4)
        z[i + j] += *p[i] * *q[j];
      else
        z[i + j - 4] -= *p[i] * *q[j];
    }
  }
  return {z[3], z[2], z[1], z[0]};
}

std::string ZOmega::to_string() const {
  std::string s;
  append_term(s, a_, "ω³", true);
  append_term(s, b_, "ω²", false);
  append_term(s, c_, "ω", false);
  append_term(s, d_, "", false);
  return s;
}

// ------------------------------------------------------------------- DOmega

DOmega::DOmega(ZOmega num, long k) : num_(std::move(num)), k_(k) {
  if (k < 0) throw std::invalid_argument("DOmega: negative denominator exponent");
}

DOmega DOmega::reduce() const {
  if (num_.is_zero()) return {ZOmega(), 0};
  ZOmega n = num_;
  long k = k_;
  while (k > 0 && n.divisible_by_sqrt2()) {
    n = n.div_sqrt2();
    --k;
  }
  return {n, k};
}

ZOmega DOmega::num_at(long k) const {
  if (k < k_) throw std::invalid_argument("DOmega::num_at: exponent below current");
  ZOmega n = num_;
  long diff = k - k_;
  // Multiply by 2 for each pair, √2 for a leftover.
  if (diff >= 2) {
    Integer f = pow2(static_cast<std::size_t>(diff / 2));
    n = ZOmega(n.a() * f, n.b() * f, n.c() * f, n.d() * f);
  }
  if (diff % 2) n = n.mul_sqrt2();
  return n;
}

DOmega DOmega::bullet() const {
  ZOmega n = num_.bullet();
  return {k_ % 2 ? ZOmega(-n) : n, k_};
}

DOmega operator+(const DOmega &x, const DOmega &y) {
  const long k = std::max(x.k_, y.k_);
  return {x.num_at(k) + y.num_at(k), k};
}

DOmega operator-(const DOmega &x, const DOmega &y) {
  const long k = std::max(x.k_, y.k_);
  return {x.num_at(k) - y.num_at(k), k};
}

bool operator==(const DOmega &x, const DOmega &y) {
  const long k = std::max(x.k_, y.k_);
  return x.num_at(k) == y.num_at(k);
}

std::complex<double> DOmega::to_complex() const {
  return num_.to_complex() * std::pow(std::sqrt(0.5), static_cast<double>(k_));
}

std::string DOmega::to_string() const { return "(" + num_.to_string() + ")/√2^" + std::to_string(k_); }

std::ostream &operator<<(std::ostream &os, const ZRootTwo &x) { return os << x.to_string(); }
std::ostream &operator<<(std::ostream &os, const ZComplex &x) { return os << x.to_string(); }
std::ostream &operator<<(std::ostream &os, const ZOmega &x) { return os << x.to_string(); }
std::ostream &operator<<(std::ostream &os, const DOmega &x) { return os << x.to_string(); }

// ------------------------------------------------------ Euclidean division

DivMod<Integer> euclid_divmod(const Integer &s, const Integer &t) {
  if (t == 0) throw std::domain_error("euclid_divmod: division by zero");
  Integer q = round_div(s, t);
  return {q, s - q * t};
}

DivMod<ZRootTwo> euclid_divmod(const ZRootTwo &s, const ZRootTwo &t) {
  if (t.is_zero()) throw std::domain_error("euclid_divmod: division by zero");
  const Integer n = t.norm();
  const ZRootTwo num = s * t.bullet();
  ZRootTwo q(round_div(num.a(), n), round_div(num.b(), n));
  return {q, s - q * t};
}

DivMod<ZComplex> euclid_divmod(const ZComplex &s, const ZComplex &t) {
  if (t.is_zero()) throw std::domain_error("euclid_divmod: division by zero");
  const Integer n = t.norm();
  const ZComplex num = s * t.dagger();
  ZComplex q(round_div(num.a(), n), round_div(num.b(), n));
  return {q, s - q * t};
}

namespace {

// Product of the three non-trivial conjugates of t; t times this is yN(t).
ZOmega conjugate_cofactor(const ZOmega &t) { return t.dagger() * t.bullet() * t.bullet().dagger(); }

}  // namespace

DivMod<ZOmega> euclid_divmod(const ZOmega &s, const ZOmega &t) {
  if (t.is_zero()) throw std::domain_error("euclid_divmod: division by zero");
  const Integer n = t.norm();
  const ZOmega num = s * conjugate_cofactor(t);
  ZOmega q(round_div(num.a(), n), round_div(num.b(), n), round_div(num.c(), n), round_div(num.d(), n));
  return {q, s - q * t};
}

template <>
Integer gcd<Integer>(Integer s, Integer t) {
  if (s == 0 && t == 0) throw std::domain_error("gcd(0, 0) is undefined");
  Integer g;
  mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  return g;
}

std::optional<ZRootTwo> divide_exact(const ZRootTwo &s, const ZRootTwo &t) {
  if (t.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const Integer n = t.norm();
  const ZRootTwo num = s * t.bullet();
  if (num.a() % n != 0 || num.b() % n != 0) return std::nullopt;
  return ZRootTwo(num.a() / n, num.b() / n);
}

std::optional<ZOmega> divide_exact(const ZOmega &s, const ZOmega &t) {
  if (t.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const Integer n = t.norm();
  const ZOmega num = s * conjugate_cofactor(t);
  if (num.a() % n != 0 || num.b() % n != 0 || num.c() % n != 0 || num.d() % n != 0) return std::nullopt;
  return ZOmega(num.a() / n, num.b() / n, num.c() / n, num.d() / n);
}

// -------------------------------------------------------------------- units

UnitExponents unit_decompose(const ZRootTwo &u) {
  const Integer nu = u.norm();
  if (nu != 1 && nu != -1) throw std::invalid_argument("unit_decompose: " + u.to_string() + " is not a unit");
  Integer a = u.a(), b = u.b();
  long k = 0;
  // Each step strictly decreases |b|.
  while (b != 0) {
    if (sgn(a) == sgn(b)) {
      // u·(√2-1) = (2b-a) + (a-b)√2
      Integer na = 2 * b - a, nb = a - b;
      a = std::move(na);
      b = std::move(nb);
      --k;
    } else {
      // u·(√2+1) = (a+2b) + (a+b)√2
      Integer na = a + 2 * b, nb = a + b;
      a = std::move(na);
      b = std::move(nb);
      ++k;
    }
  }
  return {a < 0 ? 1 : 0, k};
}

ZRootTwo unit_compose(const UnitExponents &e) {
  ZRootTwo v = ZRootTwo::lambda_pow(-e.k);
  return e.n % 2 ? -v : v;
}

std::optional<ZRootTwo> unit_sqrt(const ZRootTwo &u) {
  const UnitExponents e = unit_decompose(u);
  if (e.n != 0 || e.k % 2 != 0) return std::nullopt;
  return ZRootTwo::lambda_pow(-e.k / 2);
}

// ------------------------------------------------------------------ parsing

namespace {

struct UnitSpelling {
  const char *text;
  int slot;
};

// Parses a signed sum of terms "[±][digits][unit]" where each unit spelling
// maps to a coefficient slot. Longer spellings must precede their prefixes.
std::vector<Integer> parse_terms(const std::string &raw, const std::vector<UnitSpelling> &units,
                                 std::size_t slots, const char *what) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  auto fail = [&](std::size_t pos, const std::string &why) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + raw + "' at offset " +
                                std::to_string(pos) + ": " + why);
  };
  if (text.empty()) fail(0, "empty input");
  std::vector<Integer> out(slots, 0);
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    const std::size_t start = i;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    } else if (!first) {
      fail(i, "expected '+' or '-'");
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    int slot = 0;
    bool matched = false;
    for (const auto &u : units) {
      const std::string spelling = u.text;
      if (text.compare(i, spelling.size(), spelling) == 0) {
        slot = u.slot;
        i += spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched && digits.empty()) fail(start, "expected a term");
    if (!matched) slot = 0;
    Integer c = digits.empty() ? Integer(1) : Integer(digits, 10);
    out[static_cast<std::size_t>(slot)] += negative ? Integer(-c) : c;
    first = false;
  }
  return out;
}

}  // namespace

ZRootTwo parse_zroottwo(const std::string &text) {
  static const std::vector<UnitSpelling> units{{"*√2", 1}, {"√2", 1}, {"*sqrt2", 1}, {"sqrt2", 1}};
  auto c = parse_terms(text, units, 2, "Z[√2] element");
  return {c[0], c[1]};
}

ZComplex parse_zcomplex(const std::string &text) {
  static const std::vector<UnitSpelling> units{{"*i", 1}, {"i", 1}};
  auto c = parse_terms(text, units, 2, "Z[i] element");
  return {c[0], c[1]};
}

ZOmega parse_zomega(const std::string &text) {
  static const std::vector<UnitSpelling> units{
      {"ω³", 3}, {"ω²", 2}, {"ω^3", 3}, {"ω^2", 2}, {"ω^1", 1}, {"ω", 1},
      {"w^3", 3}, {"w^2", 2}, {"w^1", 1}, {"w", 1},
  };
  auto c = parse_terms(text, units, 4, "Z[ω] element");
  return {c[3], c[2], c[1], c[0]};
}

DOmega parse_domega(const std::string &raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  const std::size_t close = text.rfind(")/");
  if (text.empty() || text.front() != '(' || close == std::string::npos) return {parse_zomega(text), 0};
  std::string tail = text.substr(close + 2);
  for (const char *prefix : {"√2^", "sqrt2^"}) {
    const std::string p = prefix;
    if (tail.compare(0, p.size(), p) == 0) {
      const std::string exp = tail.substr(p.size());
      if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("cannot parse D[ω] exponent in '" + raw + "'");
      return {parse_zomega(text.substr(1, close - 1)), std::stol(exp)};
    }
  }
  throw std::invalid_argument("cannot parse D[ω] element '" + raw + "'");
}

}  // namespace ctsynth
