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

#include "ctsynth/grid.hpp"

#include <algorithm>
#include <cmath>

namespace ctsynth {

namespace {

Integer lcm(const Integer &x, const Integer &y) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Precision bits_for(const Rational &q) {
  return static_cast<Precision>(mpz_sizeinbase(q.get_num_mpz_t(), 2) +
                                mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

const QRootTwo kLambda{1, 1};
const QRootTwo kInvSqrt2{0, Rational(1, 2)};

}  // namespace

// ------------------------------------------------------------------ QRootTwo

int QRootTwo::sign() const {
  const Integer d = lcm(a_.get_den(), b_.get_den());
  return ZRootTwo(a_.get_num() * (d / a_.get_den()), b_.get_num() * (d / b_.get_den())).sign();
}

Integer QRootTwo::floor() const {
  const Precision prec = 64 + std::max(bits_for(a_), bits_for(b_));
  const HighPrecReal v = HighPrecReal(a_, prec) + HighPrecReal(b_, prec) * ctsynth::sqrt2(prec);
  Integer f = v.floor();
  while ((*this - QRootTwo(Rational(f))).sign() < 0) f -= 1;
  while ((*this - QRootTwo(Rational(f + 1))).sign() >= 0) f += 1;
  return f;
}

Integer QRootTwo::ceil() const { return -(-*this).floor(); }

double QRootTwo::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QRootTwo::to_string() const {
  std::string s = a_.get_str();
  if (b_ != 0) s += (b_ > 0 ? "+" : "") + b_.get_str() + "√2";
  return s;
}

// --------------------------------------------------------------- GridProblem

bool GridProblem::guaranteed() const {
  const QRootTwo w = delta() * Delta();
  return delta().sign() > 0 && compare(w, QRootTwo(3, 2)) >= 0;  // (1+√2)² = 3+2√2
}

bool GridProblem::contains(const ZRootTwo &alpha) const {
  const QRootTwo v(alpha), vb(alpha.bullet());
  return x0 <= v && v <= x1 && y0 <= vb && vb <= y1;
}

GridProblem GridProblem::rescale(long n) const {
  const QRootTwo m(ZRootTwo::lambda_pow(n));
  const QRootTwo mb = m.bullet();
  GridProblem r{m * x0, m * x1, mb * y0, mb * y1};
  if (n % 2 != 0) std::swap(r.y0, r.y1);
  return r;
}

GridProblem GridProblem::inner(const Interval &x0, const Interval &x1, const Interval &y0,
                               const Interval &y1) {
  return {QRootTwo(x0.hi()), QRootTwo(x1.lo()), QRootTwo(y0.hi()), QRootTwo(y1.lo())};
}

// -------------------------------------------------------------------- solver

namespace {

// The explicit construction for (δ, Δ) = (1+√2, √2): returns α, α', α''
// with the one selected by the case split first.
std::vector<ZRootTwo> base_candidates(const QRootTwo &x, const QRootTwo &y) {
  const QRootTwo s2 = QRootTwo::sqrt2();
  // a - 1 <= (x + y + √2)/2 < a
  const Integer a = ((x + y + s2) * QRootTwo(Rational(1, 2))).floor() + 1;
  // (b - 1)√2 <= (x - y - √2)/2 < b√2
  const Integer b = ((x - y) * QRootTwo(0, Rational(1, 4)) - QRootTwo(Rational(1, 2))).floor() + 1;
  const ZRootTwo alpha(a, b), alpha1(a, b + 1), alpha2(a - 1, b);
  const QRootTwo qa(alpha);
  if (QRootTwo(alpha.bullet()) <= y + s2) return {alpha, alpha1, alpha2};
  if (qa <= x + 1) return {alpha1, alpha, alpha2};
  return {alpha2, alpha, alpha1};
}

// Least-effort search around the construction's output for problems whose
// δ lies in (1, 1+√2]. In the guaranteed regime the first candidate of the
// preferred route is a solution.
std::optional<ZRootTwo> solve_normalized(const GridProblem &gp) {
  const QRootTwo lam = kLambda;
  const QRootTwo lam_inv{-1, 1};
  const QRootTwo one_minus_sqrt2{1, -1};
  std::vector<ZRootTwo> route_a, route_b;
  // δ > √2: (√2, 1+√2) coverage with the roles of α and α• exchanged.
  for (const ZRootTwo &beta : base_candidates(gp.y0, gp.x0)) route_a.push_back(beta.bullet());
  // δ <= √2: (1, 2+√2) coverage, reached through one λ-rescaling.
  for (const ZRootTwo &zeta : base_candidates(-lam * gp.x0 - lam, lam_inv * gp.y0))
    route_b.push_back(ZRootTwo(1, -1) * zeta);
  const bool wide = compare(gp.delta(), QRootTwo::sqrt2()) > 0;
  std::vector<ZRootTwo> order = wide ? route_a : route_b;
  const std::vector<ZRootTwo> &other = wide ? route_b : route_a;
  order.insert(order.end(), other.begin(), other.end());
  for (const ZRootTwo &c : order)
    if (gp.contains(c)) return c;
  for (const ZRootTwo &c : order)
    for (long da = -1; da <= 1; ++da)
      for (long db = -1; db <= 1; ++db) {
        ZRootTwo n(c.a() + da, c.b() + db);
        if (gp.contains(n)) return n;
      }
  return std::nullopt;
}

}  // namespace

std::optional<ZRootTwo> solve_grid(const GridProblem &gp, GridStats *stats) {
  if (stats) stats->rescale_steps = 0;
  const QRootTwo delta = gp.delta(), Delta = gp.Delta();
  if (delta.sign() < 0 || Delta.sign() < 0) return std::nullopt;
  if (delta.sign() == 0 || Delta.sign() == 0) {
    // Degenerate box: the brute-force range is tiny.
    auto all = count_solutions_bruteforce(gp, -1);
    if (all.empty()) return std::nullopt;
    return all.front();
  }

  // n with 1 < λ^n δ <= λ: logarithmic estimate, then exact correction.
  const Precision prec = 64 + std::max(bits_for(delta.a()), bits_for(delta.b()));
  const HighPrecReal dv = HighPrecReal(delta.a(), prec) + HighPrecReal(delta.b(), prec) * sqrt2(prec);
  const HighPrecReal ll = log(HighPrecReal(1L, prec) + sqrt2(prec));
  long n = -static_cast<long>(std::floor((log(dv) / ll).to_double()));
  auto scaled = [&](long m) { return QRootTwo(ZRootTwo::lambda_pow(m)) * delta; };
  while (compare(scaled(n), QRootTwo(1)) <= 0) ++n;
  while (compare(scaled(n), kLambda) > 0) --n;
  if (stats) stats->rescale_steps = n < 0 ? -n : n;

  const GridProblem scaled_gp = gp.rescale(n);
  auto found = solve_normalized(scaled_gp);
  if (!found) return std::nullopt;
  const ZRootTwo alpha = ZRootTwo::lambda_pow(-n) * *found;
  if (!gp.contains(alpha)) return std::nullopt;
  return alpha;
}

std::optional<ZRootTwo> solve_grid_parity(const GridProblem &gp, Parity parity, GridStats *stats) {
  // a is even iff α = √2·α'' for some α'' ∈ Z[√2]; α• = -√2·α''•.
  GridProblem shifted = gp;
  if (parity == Parity::Odd) shifted = {gp.x0 - 1, gp.x1 - 1, gp.y0 - 1, gp.y1 - 1};
  const GridProblem half{shifted.x0 * kInvSqrt2, shifted.x1 * kInvSqrt2, -(shifted.y1 * kInvSqrt2),
                         -(shifted.y0 * kInvSqrt2)};
  auto sol = solve_grid(half, stats);
  if (!sol) return std::nullopt;
  ZRootTwo alpha(2 * sol->b(), sol->a());
  if (parity == Parity::Odd) alpha += ZRootTwo(1);
  if (!gp.contains(alpha)) return std::nullopt;
  return alpha;
}

std::vector<ZRootTwo> count_solutions_bruteforce(const GridProblem &gp, long bound) {
  std::vector<ZRootTwo> out;
  if (gp.delta().sign() < 0 || gp.Delta().sign() < 0) return out;
  // α - α• = 2b√2 and α + α• = 2a bound b and a.
  const QRootTwo quarter_sqrt2{0, Rational(1, 4)};
  Integer b_lo = ((gp.x0 - gp.y1) * quarter_sqrt2).ceil();
  Integer b_hi = ((gp.x1 - gp.y0) * quarter_sqrt2).floor();
  if (bound >= 0) {
    b_lo = std::max(b_lo, Integer(-bound));
    b_hi = std::min(b_hi, Integer(bound));
  }
  for (Integer b = b_lo; b <= b_hi; ++b) {
    const QRootTwo bs(0, Rational(b));
    Integer a_lo = std::max((gp.x0 - bs).ceil(), (gp.y0 + bs).ceil());
    Integer a_hi = std::min((gp.x1 - bs).floor(), (gp.y1 + bs).floor());
    if (bound >= 0) {
      a_lo = std::max(a_lo, Integer(-bound));
      a_hi = std::min(a_hi, Integer(bound));
    }
    for (Integer a = a_lo; a <= a_hi; ++a) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace ctsynth
