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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace ctsynth {

/// Arbitrary-precision integer used by every ring type.
using Integer = mpz_class;
/// Exact rational, used for user-supplied tolerances.
using Rational = mpq_class;

/// Random source shared by all randomized routines. Fully specified by the
/// standard, so seeded runs reproduce across platforms.
using Rng = std::mt19937_64;

/// Nearest integer to num/den, ties toward even. den must be non-zero.
Integer round_div(const Integer &num, const Integer &den);

/// Floor of num/den for den != 0.
Integer floor_div(const Integer &num, const Integer &den);

/// Largest r with r*r <= n, for n >= 0.
Integer isqrt(const Integer &n);

/// base^exp mod m by repeated squaring. If mult_count is non-null it is
/// incremented once per modular multiplication performed.
Integer pow_mod(const Integer &base, const Integer &exp, const Integer &m,
                std::size_t *mult_count = nullptr);

/// Uniform integer in [0, bound) drawn by rejection sampling. bound > 0.
Integer uniform_below(Rng &rng, const Integer &bound);

/// Uniform integer in [lo, hi].
Integer uniform_between(Rng &rng, const Integer &lo, const Integer &hi);

/// 2^e for e >= 0.
Integer pow2(std::size_t e);

inline bool is_odd(const Integer &n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
inline bool is_even(const Integer &n) { return mpz_even_p(n.get_mpz_t()) != 0; }

/// Parses a decimal literal with optional fraction and exponent
/// ("12", "0.25", "1e-100", "-3.5E+2") into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(const std::string &text);

/// Renders a rational whose denominator divides a power of ten as an
/// exact decimal string; otherwise as "p/q".
std::string to_decimal_string(const Rational &q);

}  // namespace ctsynth
