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

#include "ctsynth/approx.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

#include "ctsynth/diophantine.hpp"
#include "ctsynth/exact_synth.hpp"
#include "ctsynth/grid.hpp"

namespace ctsynth {

namespace {

/// √2^k as an exact element of Q(√2).
QRootTwo root2_pow(long k) {
  if (k % 2 == 0) return QRootTwo(Rational(pow2(k / 2)));
  return QRootTwo(Rational(0), Rational(pow2((k - 1) / 2)));
}

/// Enclosure of 1/√2^k.
Interval inv_root2_pow(long k, Precision prec) {
  if (k % 2 == 0) return Interval::exact(1, prec).ldexp(-(k / 2));
  return Interval::sqrt2(prec).ldexp(-((k + 1) / 2));
}

/// Lower end of an enclosure of q, as a real.
const HighPrecReal lower(const Rational &q, Precision prec) { return HighPrecReal(q, prec, Round::Down); }
const HighPrecReal upper(const Rational &q, Precision prec) { return HighPrecReal(q, prec, Round::Up); }

void check_epsilon(const Rational &epsilon) {
  if (epsilon <= 0 || epsilon > Rational(1, 2))
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon <= 1/2");
}

}  // namespace

long min_denominator_exponent(const Rational &epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  // k >= 5/2 + 2·log2(λ) + 2·log2(1/ε)  <=>  2^k ε² >= 4√2 (3 + 2√2)
  //   <=>  2^k N² - 16 D² >= 12√2 D²  with ε = N/D.
  const Integer n2 = epsilon.get_num() * epsilon.get_num();
  const Integer d2 = epsilon.get_den() * epsilon.get_den();
  auto ok = [&](long k) {
    Integer lhs = pow2(k) * n2 - 16 * d2;
    return lhs >= 0 && lhs * lhs >= 288 * d2 * d2;
  };
  long k = std::max(0L, static_cast<long>(std::floor(5.04 + 2 * log2_inverse(epsilon))) - 2);
  while (k > 0 && ok(k - 1)) --k;
  while (!ok(k)) ++k;
  return k;
}

Integer slot_count(const Rational &epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  // ⌊4√2/ε⌋ = ⌊√(32 D²/N²)⌋ = isqrt(⌊32 D²/N²⌋).
  const Integer &n = epsilon.get_num(), &d = epsilon.get_den();
  return isqrt(floor_div(32 * d * d, n * n));
}

Precision working_precision(long k) {
  Precision p = std::max<Precision>(64, 2 * k + 32);
  if (const char *env = std::getenv("CTSYNTH_PRECISION")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > p) p = v;
  }
  return p;
}

EpsilonProblem make_problem(const AngleExpr &theta, const Rational &epsilon, std::optional<long> k) {
  check_epsilon(epsilon);
  EpsilonProblem prob;
  prob.theta = theta;
  prob.epsilon = epsilon;
  prob.k = k ? *k : min_denominator_exponent(epsilon);
  if (prob.k < 1) throw std::invalid_argument("denominator exponent must be positive");
  prob.n = slot_count(epsilon);
  prob.prec = working_precision(prob.k);
  const Precision prec = prob.prec;

  // Reduce θ by a multiple of π/2. Extra bits cover the cancellation.
  HighPrecReal rough = theta.enclose(64).mid();
  Precision extra = 16 + std::max(0L, rough.exponent());
  Interval th = theta.enclose(prec + extra);
  Interval quarter = Interval::pi(prec + extra).ldexp(-1);
  Integer m = (div(th.mid(), quarter.mid()) + HighPrecReal(Rational(1, 2), prec + extra)).floor();
  Interval reduced = (th - Interval::of(Rational(m), prec + extra) * quarter).with_precision(prec);
  prob.quarter_turns = static_cast<int>(mpz_fdiv_ui(m.get_mpz_t(), 8));

  Interval half = reduced.ldexp(-1);
  prob.zx = half.cos();
  prob.zy = -half.sin();

  // The line u·z = c meets the unit circle at c·z ± s·z⊥, s = √(1 - c²).
  const Rational e2 = epsilon * epsilon;
  const Rational c = 1 - e2 / 4;
  Interval ci = Interval::of(c, prec);
  Interval s = Interval::of(Rational(e2 / 2 - e2 * e2 / 16), prec).sqrt();
  prob.y_min = ci * prob.zy - s * prob.zx;
  prob.y_max = ci * prob.zy + s * prob.zx;
  prob.slot_lo = prob.y_min.hi().to_rational();
  prob.slot_hi = prob.y_max.lo().to_rational();
  return prob;
}

bool region_contains(const ComplexInterval &u_hat, const EpsilonProblem &prob) {
  const Precision prec = prob.prec;
  Interval dot = u_hat.re * prob.zx + u_hat.im * prob.zy;
  const Rational e2 = prob.epsilon * prob.epsilon;
  if (dot.lo() < upper(1 - e2 / 2, prec)) return false;
  return u_hat.abs2().hi() <= HighPrecReal(1L, prec);
}

bool region_contains(const Rational &x, const Rational &y, const EpsilonProblem &prob) {
  if (x * x + y * y > 1) return false;
  const Precision prec = prob.prec;
  Interval dot = Interval::of(x, prec) * prob.zx + Interval::of(y, prec) * prob.zy;
  const Rational e2 = prob.epsilon * prob.epsilon;
  return dot.lo() >= upper(1 - e2 / 2, prec);
}

std::optional<Candidate> random_candidate(const EpsilonProblem &prob, Rng &rng) {
  const long k = prob.k;
  const Precision prec = prob.prec;
  const Rational e2 = prob.epsilon * prob.epsilon;
  const QRootTwo sk = root2_pow(k), sk1 = root2_pow(k - 1);

  Integer j = uniform_below(rng, prob.n);
  Rational yj = prob.slot_lo + Rational(j) * (prob.slot_hi - prob.slot_lo) / Rational(prob.n);

  // Imaginary part β: β̂ ∈ [y_j, y_j + ε²/8], |β•| <= √2^(k-1).
  GridProblem gb{sk * QRootTwo(yj), sk * QRootTwo(Rational(yj + e2 / 8)), -sk1, sk1};
  std::optional<ZRootTwo> beta = solve_grid(gb);
  if (!beta) return std::nullopt;

  // Real part α: the parallelogram's row at height β̂ starts at
  // x0 = (1 - ε²/2 - β̂ z_y)/z_x and contains [x0, x0 + ε²/4].
  Interval bh = Interval::of(*beta, prec) * inv_root2_pow(k, prec);
  Interval x0 = (Interval::of(Rational(1 - e2 / 2), prec) - bh * prob.zy) / prob.zx;
  Rational xa = x0.hi().to_rational(), xb = x0.lo().to_rational() + e2 / 4;
  if (xb < xa) return std::nullopt;
  GridProblem ga{sk * QRootTwo(xa), sk * QRootTwo(xb), -sk1, sk1};
  Parity parity = is_even(beta->a()) ? Parity::Odd : Parity::Even;
  std::optional<ZRootTwo> alpha = solve_grid_parity(ga, parity);
  if (!alpha) return std::nullopt;

  // u = α + βi with α = a + b√2, β = c + d√2.
  const Integer &a = alpha->a(), &b = alpha->b(), &c = beta->a(), &d = beta->b();
  Candidate cand;
  cand.u = ZOmega(d - b, c, b + d, a);
  cand.k = k;
  cand.slot = j;
  std::optional<ZRootTwo> uu = (cand.u.dagger() * cand.u).to_root_two();
  if (!uu || !is_odd(Integer(a + c))) return std::nullopt;
  cand.xi = ZRootTwo(pow2(k)) - *uu;
  NormEquationInstance inst = NormEquationInstance::of(cand.xi);
  cand.p = inst.p;
  if (!inst.well_formed()) return std::nullopt;
  if (!region_contains(enclose(DOmega(cand.u, k), prec), prob)) return std::nullopt;

  // ξ = 2^k (1 - |û|²) <= 2^k (1 - (1 - ε²/2)²) <= 2^k ε², and ξ• <= 2^k.
  if (!(QRootTwo(cand.xi) <= QRootTwo(Rational(Rational(pow2(k)) * e2))))
    throw std::logic_error("candidate violates xi <= 2^k eps^2");
  return cand;
}

namespace {

struct Found {
  UnitaryDOmega u;
  HighPrecReal error;
};

/// Norm equation, assembly and certification for one candidate.
std::optional<Found> finish(const EpsilonProblem &prob, const Candidate &cand, Rng &rng) {
  std::optional<ZOmega> t = solve_norm_equation(NormEquationInstance{cand.xi, cand.p}, rng);
  if (!t) return std::nullopt;
  ZOmega w = ZOmega::omega_pow((8 - prob.quarter_turns) % 8);
  UnitaryDOmega u = UnitaryDOmega::from_columns(cand.u * w, *t * w, prob.k);
  HighPrecReal err = op_norm_error(u, prob.theta);
  if (err > lower(prob.epsilon, err.precision())) return std::nullopt;
  return Found{u, err};
}

struct Counters {
  std::atomic<std::size_t> draws{0}, candidates{0}, slot_failures{0};
};

std::optional<Found> search(const EpsilonProblem &prob, std::size_t budget, int workers, Rng &rng,
                            Counters &ctr) {
  if (workers <= 1) {
    while (ctr.draws.fetch_add(1) < budget) {
      std::optional<Candidate> cand = random_candidate(prob, rng);
      if (!cand) {
        ++ctr.slot_failures;
        continue;
      }
      ++ctr.candidates;
      if (auto f = finish(prob, *cand, rng)) return f;
    }
    return std::nullopt;
  }
  std::atomic<bool> done{false};
  std::mutex mu;
  std::optional<Found> result;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, seed = rng()] {
      Rng local(seed);
      try {
        while (!done.load() && ctr.draws.fetch_add(1) < budget) {
          std::optional<Candidate> cand = random_candidate(prob, local);
          if (!cand) {
            ++ctr.slot_failures;
            continue;
          }
          ++ctr.candidates;
          if (auto f = finish(prob, *cand, local)) {
            std::lock_guard<std::mutex> lock(mu);
            if (!result) result = std::move(f);
            done = true;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        done = true;
      }
    });
  }
  for (std::thread &t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace

RzApproximation approximate_rz(const AngleExpr &theta, const Rational &epsilon, Rng &rng,
                               const SynthLimits &limits) {
  check_epsilon(epsilon);
  auto start = std::chrono::steady_clock::now();
  SynthStats stats;
  stats.epsilon = epsilon;
  stats.k_initial = min_denominator_exponent(epsilon);
  Counters ctr;
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  auto record = [&] {
    stats.candidates_tried = ctr.candidates.load();
    stats.slot_failures = ctr.slot_failures.load();
    stats.wall_time_s = elapsed();
  };
  for (int esc = 0; esc <= limits.max_escalations; ++esc) {
    stats.k = stats.k_initial + esc;
    EpsilonProblem prob = make_problem(theta, epsilon, stats.k);
    std::size_t budget = limits.max_candidates_per_k ? limits.max_candidates_per_k
                                                     : static_cast<std::size_t>(64 * stats.k);
    ctr.draws = 0;
    std::optional<Found> f = search(prob, budget, limits.workers, rng, ctr);
    if (!f) continue;
    RzApproximation r;
    r.u = f->u;
    r.word = exact_synthesize(f->u);
    stats.t_count = t_count(r.word);
    stats.error_bound = f->error;
    record();
    r.stats = stats;
    return r;
  }
  record();
  throw SynthesisError("no solution within the candidate limits", stats);
}

Su2Approximation approximate_su2(const Matrix2 &target, const Rational &epsilon, Rng &rng,
                                 const SynthLimits &limits) {
  check_epsilon(epsilon);
  const Precision prec = std::max<Precision>(128, static_cast<Precision>(2 * log2_inverse(epsilon)) + 64);

  // SU(2) elements are [[a, b], [-b*, a*]] with |a|² + |b|² = 1.
  auto mid = [&](const Interval &x) { return x.mid(); };
  const ComplexInterval &a = target.at(0, 0), &b = target.at(0, 1);
  {
    const HighPrecReal tol = ldexp(HighPrecReal(1L, prec), -40);
    auto near = [&](const Interval &x, const Interval &y) { return abs(mid(x - y)) <= tol; };
    Interval one = Interval::exact(1, prec);
    if (!near(a.abs2() + b.abs2(), one) || !near(target.at(1, 1).re, a.re) ||
        !near(target.at(1, 1).im, -a.im) || !near(target.at(1, 0).re, -b.re) ||
        !near(target.at(1, 0).im, b.im))
      throw std::invalid_argument("target is not special unitary");
  }

  // Rz(β)·Rx(γ)·Rz(δ) = [[cos(γ/2) e^{-i(β+δ)/2}, -i sin(γ/2) e^{-i(β-δ)/2}], ...]
  HighPrecReal ar = mid(a.re), ai = mid(a.im), br = mid(b.re), bi = mid(b.im);
  HighPrecReal abs_a = sqrt(ar * ar + ai * ai), abs_b = sqrt(br * br + bi * bi);
  HighPrecReal zero(0L, prec), pi_v = pi(prec);
  HighPrecReal gamma = ldexp(atan2(abs_b, abs_a), 1);
  HighPrecReal sum = abs_a.is_zero() ? zero : -ldexp(atan2(ai, ar), 1);
  // With b = 0 only β + δ matters; put it all in β.
  HighPrecReal diff = abs_b.is_zero() ? sum : -ldexp(atan2(bi, br), 1) - pi_v;
  Su2Approximation out;
  out.beta = ldexp(sum + diff, -1);
  out.delta = ldexp(sum - diff, -1);
  out.gamma = gamma;

  // Budget: each rotation gets ε(1 - 2^-20)/3. Angles below ε·2^-24 are
  // dropped (‖Rz(x) - I‖ <= |x|/2), which together with the Euler rounding
  // stays inside the remaining ε·2^-20/3.
  const Rational each = epsilon * Rational(pow2(20) - 1, pow2(20)) / 3;
  const HighPrecReal skip = HighPrecReal(Rational(epsilon / Rational(pow2(24))), prec);
  GateWord word;
  const HighPrecReal *angles[3] = {&out.beta, &out.gamma, &out.delta};
  for (int i = 0; i < 3; ++i) {
    if (i > 0) word.push_back(Gate::H);
    out.stats[i].epsilon = each;
    if (abs(*angles[i]) <= skip) continue;
    RzApproximation r = approximate_rz(AngleExpr::number(angles[i]->to_rational()), each, rng, limits);
    out.stats[i] = r.stats;
    word.insert(word.end(), r.word.begin(), r.word.end());
  }
  out.word = ma_normalize(word).word();
  out.u = evaluate_word(out.word);
  out.error_bound = op_norm_distance(out.u, target, std::max(prec, verification_precision(out.u.k())));
  if (out.error_bound > lower(epsilon, out.error_bound.precision())) {
    SynthStats st = out.stats[0];
    st.error_bound = out.error_bound;
    throw SynthesisError("certified error exceeds epsilon", st);
  }
  return out;
}

}  // namespace ctsynth
