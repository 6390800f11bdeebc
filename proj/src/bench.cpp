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

#include "ctsynth/bench.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

namespace ctsynth {

std::uint64_t bench_seed(std::uint64_t seed, std::size_t row, std::size_t run) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(run)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<BenchRow> benchmark(const AngleExpr &theta, const std::vector<Rational> &epsilons,
                                std::size_t runs, std::uint64_t seed, const SynthLimits &limits) {
  std::vector<BenchRow> rows;
  for (std::size_t r = 0; r < epsilons.size(); ++r) {
    BenchRow row;
    row.epsilon = epsilons[r];
    row.runs = runs;
    row.k_initial = min_denominator_exponent(epsilons[r]);
    row.error_bound = HighPrecReal(0L, 64);
    double time = 0, cands = 0;
    for (std::size_t i = 0; i < runs; ++i) {
      Rng rng(bench_seed(seed, r, i));
      SynthStats st;
      try {
        st = approximate_rz(theta, epsilons[r], rng, limits).stats;
        row.k = std::max(row.k, st.k);
        row.t_count = std::max(row.t_count, st.t_count);
        if (st.error_bound > row.error_bound) row.error_bound = st.error_bound;
      } catch (const SynthesisError &e) {
        st = e.stats();
        ++row.failures;
        row.errors.push_back(e.what());
      }
      time += st.wall_time_s;
      cands += static_cast<double>(st.candidates_tried);
      row.samples.push_back(st);
    }
    if (runs > 0) {
      row.runtime_s = time / static_cast<double>(runs);
      row.candidates = cands / static_cast<double>(runs);
    }
    row.time_per_candidate_s = cands > 0 ? time / cands : 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_epsilon(const Rational &epsilon) {
  if (epsilon.get_num() == 1) {
    Integer d = epsilon.get_den();
    long n = 0;
    while (d > 1 && mpz_divisible_ui_p(d.get_mpz_t(), 10)) d /= 10, ++n;
    if (d == 1 && n > 0) return "1e-" + std::to_string(n);
  }
  return to_decimal_string(epsilon);
}

double median_candidates(const BenchRow &row) {
  std::vector<double> v;
  for (const SynthStats &s : row.samples) v.push_back(static_cast<double>(s.candidates_tried));
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

namespace {

nlohmann::ordered_json row_json(const Rational &eps, long k, std::size_t t, const HighPrecReal &err,
                                double runtime, double cands, double per) {
  nlohmann::ordered_json j;
  j["epsilon"] = format_epsilon(eps);
  j["k"] = k;
  j["t_count"] = t;
  j["error_bound"] = err.to_string(6);
  j["runtime_s"] = runtime;
  j["candidates"] = cands;
  j["time_per_candidate_s"] = per;
  return j;
}

}  // namespace

std::string format_table(const std::vector<BenchRow> &rows) {
  std::ostringstream os;
  os << "epsilon\tk\tt_count\terror_bound\truntime_s\tcandidates\ttime_per_candidate_s\n";
  for (const BenchRow &r : rows)
    os << format_epsilon(r.epsilon) << '\t' << r.k << '\t' << r.t_count << '\t' << r.error_bound.to_string(6)
       << '\t' << r.runtime_s << '\t' << r.candidates << '\t' << r.time_per_candidate_s << '\n';
  return os.str();
}

std::string to_json_lines(const std::vector<BenchRow> &rows) {
  std::string out;
  for (const BenchRow &r : rows)
    out += row_json(r.epsilon, r.k, r.t_count, r.error_bound, r.runtime_s, r.candidates,
                    r.time_per_candidate_s)
               .dump() +
           "\n";
  return out;
}

std::string stats_json(const SynthStats &s) {
  double per = s.candidates_tried ? s.wall_time_s / static_cast<double>(s.candidates_tried) : 0;
  return row_json(s.epsilon, s.k, s.t_count, s.error_bound, s.wall_time_s,
                  static_cast<double>(s.candidates_tried), per)
      .dump();
}

}  // namespace ctsynth
