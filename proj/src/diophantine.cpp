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

#include "ctsynth/diophantine.hpp"

#include <stdexcept>

namespace ctsynth {

bool NormEquationInstance::well_formed() const {
  return is_odd(xi.a()) && is_even(xi.b()) && xi.sign() >= 0 && xi.bullet().sign() >= 0 &&
         p == xi.norm();
}

std::optional<Integer> root_minus_one(const Integer &p, std::size_t max_attempts, Rng &rng,
                                      std::size_t *mult_count) {
  if (p <= 1 || is_even(p)) throw std::invalid_argument("root_minus_one: p must be odd and > 1");
  if (p % 4 != 1) return std::nullopt;
  const Integer e = (p - 1) / 4;
  const Integer minus_one = p - 1;
  for (std::size_t i = 0; i < max_attempts; ++i) {
    const Integer b = uniform_between(rng, Integer(1), Integer(p - 1));
    Integer h = pow_mod(b, e, p, mult_count);
    // h² ≡ -1 exactly when b^((p-1)/2) ≡ -1.
    if ((h * h) % p == minus_one) return h;
  }
  return std::nullopt;
}

std::optional<ZOmega> solve_norm_equation(const NormEquationInstance &inst, Rng &rng,
                                          const NormSolverOptions &opts) {
  if (!inst.well_formed()) return std::nullopt;
  const ZOmega xi(inst.xi);
  auto verified = [&](const ZOmega &t) -> std::optional<ZOmega> {
    if (t.dagger() * t == xi) return t;
    return std::nullopt;
  };

  if (inst.p == 1) {
    // ξ is a totally positive unit, hence a square.
    auto v = unit_sqrt(inst.xi);
    if (!v) return std::nullopt;
    return verified(ZOmega(*v));
  }
  if (opts.prime_prefilter && mpz_probab_prime_p(inst.p.get_mpz_t(), 25) == 0) return std::nullopt;

  auto h = root_minus_one(inst.p, opts.max_attempts, rng);
  if (!h) return std::nullopt;
  const ZOmega s = gcd(ZOmega(0, 1, 0, *h), xi);  // gcd(h + i, ξ)
  auto sts = (s.dagger() * s).to_root_two();
  if (!sts || sts->is_zero()) return std::nullopt;
  auto u = divide_exact(inst.xi, *sts);
  if (!u) return std::nullopt;
  const Integer nu = u->norm();
  if (nu != 1 && nu != -1) return std::nullopt;
  auto v = unit_sqrt(*u);
  if (!v) return std::nullopt;
  return verified(ZOmega(*v) * s);
}

}  // namespace ctsynth
