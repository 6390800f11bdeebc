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

#include "ctsynth/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace ctsynth {

Integer floor_div(const Integer &num, const Integer &den) {
  if (den == 0) throw std::domain_error("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer round_div(const Integer &num, const Integer &den) {
  if (den == 0) throw std::domain_error("round_div: division by zero");
  Integer n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  Integer twice = r * 2;
  if (twice > d || (twice == d && is_odd(q))) q += 1;
  return q;
}

Integer isqrt(const Integer &n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer pow_mod(const Integer &base, const Integer &exp, const Integer &m,
                std::size_t *mult_count) {
  if (m <= 0) throw std::domain_error("pow_mod: modulus must be positive");
  if (exp < 0) throw std::domain_error("pow_mod: negative exponent");
  Integer result = 1 % m;
  Integer b;
  mpz_mod(b.get_mpz_t(), base.get_mpz_t(), m.get_mpz_t());
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  // Left-to-right binary method.
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % m;
    if (mult_count) ++*mult_count;
    if (mpz_tstbit(exp.get_mpz_t(), i)) {
      result = result * b % m;
      if (mult_count) ++*mult_count;
    }
  }
  return result;
}

Integer uniform_below(Rng &rng, const Integer &bound) {
  if (bound <= 0) throw std::domain_error("uniform_below: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  for (;;) {
    Integer v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = rng();
      if (w == 0 && excess > 0) x >>= excess;
      v <<= 64;
      mpz_class word;
      mpz_import(word.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
      v += word;
    }
    if (v < bound) return v;
  }
}

Integer uniform_between(Rng &rng, const Integer &lo, const Integer &hi) {
  if (hi < lo) throw std::domain_error("uniform_between: empty range");
  return lo + uniform_below(rng, Integer(hi - lo + 1));
}

Integer pow2(std::size_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational parse_decimal(const std::string &text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const char *why) {
    throw std::invalid_argument("invalid decimal '" + text + "': " + why);
  };
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  std::size_t frac_digits = 0;
  bool any = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      ++frac_digits;
      any = true;
    }
  }
  if (!any) fail("no digits");
  long exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    std::string ed;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
    if (ed.empty()) fail("empty exponent");
    if (ed.size() > 7) fail("exponent out of range");
    exponent = std::stol(ed);
    if (eneg) exponent = -exponent;
  }
  if (i != n) fail("trailing characters");
  Integer mant(digits, 10);
  exponent -= static_cast<long>(frac_digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(mant, scale) : Rational(mant * scale, 1);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_decimal_string(const Rational &q) {
  Integer den = q.get_den();
  std::size_t twos = 0, fives = 0;
  while (is_even(den)) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str();
  const std::size_t places = twos > fives ? twos : fives;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Integer scaled = q.get_num() * (scale / q.get_den());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (places > 0) {
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace ctsynth
