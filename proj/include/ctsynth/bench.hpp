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

// Repeated z-rotation synthesis runs aggregated per ε.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctsynth/approx.hpp"

namespace ctsynth {

struct BenchRow {
  Rational epsilon;
  std::size_t runs = 0;
  /// Runs that threw; their stats still count toward the averages.
  std::size_t failures = 0;
  long k_initial = 0;
  long k = 0;              // largest final k
  std::size_t t_count = 0;  // largest T-count
  HighPrecReal error_bound;  // largest certified error
  double runtime_s = 0;     // mean
  double candidates = 0;    // mean
  double time_per_candidate_s = 0;
  std::vector<SynthStats> samples;
  std::vector<std::string> errors;
};

/// Runs `runs` independent syntheses per ε. Run i of row r uses the seed
/// derived from (seed, r, i), so single runs are reproducible.
std::vector<BenchRow> benchmark(const AngleExpr &theta, const std::vector<Rational> &epsilons,
                                std::size_t runs, std::uint64_t seed, const SynthLimits &limits = {});

/// Seed of run i in row r.
std::uint64_t bench_seed(std::uint64_t seed, std::size_t row, std::size_t run);

/// "1e-10" for exact negative powers of ten, otherwise a decimal.
std::string format_epsilon(const Rational &epsilon);

double median_candidates(const BenchRow &row);

/// Tab-separated table with a header line.
std::string format_table(const std::vector<BenchRow> &rows);

/// One JSON object per line with fields epsilon, k, t_count, error_bound,
/// runtime_s, candidates, time_per_candidate_s.
std::string to_json_lines(const std::vector<BenchRow> &rows);

/// The JSON record of one synthesis run, in the same field layout.
std::string stats_json(const SynthStats &stats);

}  // namespace ctsynth
