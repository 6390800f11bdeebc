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

#include "ctsynth/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctsynth {

namespace {

ComplexInterval parse_entry(const std::string &text, Precision prec) {
  auto part = [&](const std::string &s) { return Interval::of(parse_decimal(s), prec); };
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) return {part(text), Interval::exact(0, prec)};
  return {part(text.substr(0, comma)), part(text.substr(comma + 1))};
}

HighPrecReal sqrt_up_clamped(const HighPrecReal &x) {
  if (x.sign() <= 0) return HighPrecReal(0L, x.precision());
  return sqrt(x, Round::Up);
}

}  // namespace

Matrix2 Matrix2::of(const UnitaryDOmega &u, Precision prec) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = enclose(u.entry(i / 2, i % 2), prec);
  return r;
}

Matrix2 Matrix2::from_complex(const std::array<std::complex<double>, 4> &entries, Precision prec) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i)
    r.m[i] = {Interval(HighPrecReal(entries[i].real(), prec)),
              Interval(HighPrecReal(entries[i].imag(), prec))};
  return r;
}

Matrix2 Matrix2::parse(const std::array<std::string, 4> &entries, Precision prec) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = parse_entry(entries[i], prec);
  return r;
}

Matrix2 operator-(const Matrix2 &x, const Matrix2 &y) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = x.m[i] - y.m[i];
  return r;
}

Matrix2 operator*(const Matrix2 &x, const Matrix2 &y) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[2 * i + j] = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
  return r;
}

Matrix2 rz_matrix(const Interval &theta) {
  Interval half = theta.ldexp(-1);
  Interval c = half.cos(), s = half.sin();
  Precision prec = theta.precision();
  Interval zero = Interval::exact(0, prec);
  return {{ComplexInterval{c, -s}, ComplexInterval{zero, zero}, ComplexInterval{zero, zero},
           ComplexInterval{c, s}}};
}

HighPrecReal spectral_norm_upper(const Matrix2 &d) {
  // For a 2×2 matrix the squared singular values are the roots of
  // λ² - Fλ + |det|², F the squared Frobenius norm.
  Interval f = d.m[0].abs2() + d.m[1].abs2() + d.m[2].abs2() + d.m[3].abs2();
  Interval det2 = (d.at(0, 0) * d.at(1, 1) - d.at(0, 1) * d.at(1, 0)).abs2();
  const HighPrecReal &fh = f.hi();
  HighPrecReal disc = sub(mul(fh, fh, Round::Up), ldexp(det2.lo(), 2), Round::Up);
  HighPrecReal lambda = ldexp(add(fh, sqrt_up_clamped(disc), Round::Up), -1);
  return sqrt_up_clamped(lambda);
}

Precision verification_precision(long k) { return std::max<Precision>(128, 2 * k + 64); }

HighPrecReal op_norm_error(const UnitaryDOmega &u, const AngleExpr &theta, Precision prec) {
  if (prec == 0) prec = verification_precision(u.k());
  Interval th = theta.enclose(prec);
  bool template_form = u.num(1, 1) == u.num(0, 0).dagger() && u.num(0, 1) == -u.num(1, 0).dagger() &&
                       u.is_unitary();
  if (!template_form) return spectral_norm_upper(Matrix2::of(u, prec) - rz_matrix(th));
  // ‖U - Rz(θ)‖² = |û - z|² + |t̂|² = 2 - 2·Re(û†z) since |û|² + |t̂|² = 1.
  Interval half = th.ldexp(-1);
  Interval zx = half.cos(), zy = -half.sin();
  // Both forms enclose the same value; near zero the direct one is tighter.
  ComplexInterval uh = enclose(u.entry(0, 0), prec);
  Interval dot = uh.re * zx + uh.im * zy;
  Interval sq = Interval::exact(2, prec) - dot.ldexp(1);
  Interval direct = (uh - ComplexInterval{zx, zy}).abs2() + enclose(u.entry(1, 0), prec).abs2();
  return sqrt_up_clamped(std::min(sq.hi(), direct.hi()));
}

HighPrecReal op_norm_distance(const UnitaryDOmega &u, const Matrix2 &target, Precision prec) {
  if (prec == 0) prec = verification_precision(u.k());
  return spectral_norm_upper(Matrix2::of(u, prec) - target);
}

double log2_inverse(const Rational &epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  return -log2(HighPrecReal(epsilon, 128)).to_double();
}

double lower_bound_tcount(const Rational &epsilon) { return -9 + 4 * log2_inverse(epsilon); }

double typical_lower_bound_tcount(const Rational &epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  Rational q = (1 / (192 * epsilon * epsilon * epsilon) + 2) / 3;
  return log2(HighPrecReal(q, 128)).to_double();
}

}  // namespace ctsynth
