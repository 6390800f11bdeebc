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

#include "cli.hpp"

#include <array>
#include <cstdint>
#include <sstream>

#include "CLI11.hpp"
#include "ctsynth/approx.hpp"
#include "ctsynth/bench.hpp"
#include "ctsynth/exact_synth.hpp"
#include "ctsynth/verify.hpp"

namespace ctsynth::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational parse_epsilon(const std::string &text) {
  Rational e;
  try {
    e = parse_decimal(text);
  } catch (const std::exception &) {
    throw UsageError("invalid epsilon '" + text + "'");
  }
  if (e <= 0 || e > Rational(1, 2)) throw UsageError("epsilon must satisfy 0 < epsilon <= 1/2");
  return e;
}

AngleExpr parse_theta(const std::string &text) {
  try {
    return parse_angle(text);
  } catch (const AngleParseError &e) {
    throw UsageError(std::string("invalid angle: ") + e.what());
  }
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

void print_stats(std::ostream &out, const SynthStats &s, bool json) {
  if (json) {
    out << stats_json(s) << '\n';
    return;
  }
  out << "epsilon: " << format_epsilon(s.epsilon) << '\n'
      << "k: " << s.k << " (initial " << s.k_initial << ")\n"
      << "t_count: " << s.t_count << '\n'
      << "error_bound: " << s.error_bound.to_string(6) << '\n'
      << "candidates: " << s.candidates_tried << '\n'
      << "slot_failures: " << s.slot_failures << '\n'
      << "runtime_s: " << s.wall_time_s << '\n';
}

struct Options {
  std::string theta, epsilon, word, matrix, epsilons;
  std::uint64_t seed = 0;
  bool seed_given = false, stats = false, verify = false, json = false;
  int parallel = 1;
  std::size_t runs = 1, tcount = 0, max_candidates = 0;
};

SynthLimits limits_of(const Options &o) {
  SynthLimits lim;
  lim.workers = o.parallel;
  lim.max_candidates_per_k = o.max_candidates;
  return lim;
}

Rng make_rng(const Options &o) { return Rng(o.seed_given ? o.seed : std::random_device{}()); }

int cmd_synth(const Options &o, std::ostream &out, std::ostream &err) {
  AngleExpr theta = parse_theta(o.theta);
  Rational eps = parse_epsilon(o.epsilon);
  Rng rng = make_rng(o);
  RzApproximation r;
  try {
    r = approximate_rz(theta, eps, rng, limits_of(o));
  } catch (const SynthesisError &e) {
    err << "synthesis failed: " << e.what() << '\n';
    if (o.stats) print_stats(err, e.stats(), o.json);
    return kSynthesisFailed;
  }
  out << format_word(r.word) << '\n';
  if (o.stats) print_stats(out, r.stats, o.json);
  if (o.verify) {
    // Re-derive the operator from the printed word and certify it.
    UnitaryDOmega u = evaluate_word(parse_word(format_word(r.word)));
    HighPrecReal bound = op_norm_error(u, theta);
    bool ok = bound <= HighPrecReal(eps, bound.precision(), Round::Down);
    out << "verified_error_bound: " << bound.to_string(6) << (ok ? "" : " (exceeds epsilon)") << '\n';
    if (!ok) return kVerificationFailed;
  }
  return kOk;
}

int cmd_su2(const Options &o, std::ostream &out, std::ostream &err) {
  Rational eps = parse_epsilon(o.epsilon);
  std::vector<std::string> entries = split(o.matrix, ' ');
  if (entries.size() != 4) throw UsageError("--matrix needs 4 entries 're,im' separated by spaces");
  const Precision prec = std::max<Precision>(256, static_cast<Precision>(2 * log2_inverse(eps)) + 64);
  Matrix2 target;
  try {
    target = Matrix2::parse({entries[0], entries[1], entries[2], entries[3]}, prec);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("invalid matrix entry: ") + e.what());
  }
  Rng rng = make_rng(o);
  Su2Approximation r;
  try {
    r = approximate_su2(target, eps, rng, limits_of(o));
  } catch (const SynthesisError &e) {
    err << "synthesis failed: " << e.what() << '\n';
    return kSynthesisFailed;
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  out << format_word(r.word) << '\n';
  if (o.stats) {
    out << "t_count: " << t_count(r.word) << '\n'
        << "euler_angles: " << r.beta.to_string(12) << ' ' << r.gamma.to_string(12) << ' '
        << r.delta.to_string(12) << '\n';
    for (const SynthStats &s : r.stats) print_stats(out, s, o.json);
  }
  if (o.verify) out << "verified_error_bound: " << r.error_bound.to_string(6) << '\n';
  return kOk;
}

int cmd_bench(const Options &o, std::ostream &out, std::ostream &err) {
  AngleExpr theta = parse_theta(o.theta);
  std::vector<Rational> eps;
  for (const std::string &s : split(o.epsilons, ',')) eps.push_back(parse_epsilon(s));
  if (eps.empty()) throw UsageError("--epsilons is empty");
  std::vector<BenchRow> rows = benchmark(theta, eps, o.runs, o.seed, limits_of(o));
  out << (o.json ? to_json_lines(rows) : format_table(rows));
  bool failed = false;
  for (const BenchRow &r : rows)
    for (const std::string &e : r.errors) {
      err << format_epsilon(r.epsilon) << ": " << e << '\n';
      failed = true;
    }
  return failed ? kSynthesisFailed : kOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &) {
  AngleExpr theta = parse_theta(o.theta);
  GateWord w;
  try {
    w = parse_word(o.word);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("invalid gate word: ") + e.what());
  }
  UnitaryDOmega u = evaluate_word(w);
  HighPrecReal bound = op_norm_error(u, theta);
  out << "error_bound: " << bound.to_string(6) << '\n';
  if (!o.epsilon.empty()) {
    Rational eps = parse_epsilon(o.epsilon);
    if (bound > HighPrecReal(eps, bound.precision(), Round::Down)) {
      out << "exceeds epsilon " << format_epsilon(eps) << '\n';
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_enumerate(const Options &o, std::ostream &out, std::ostream &) {
  out << count_distinct_normal_forms(o.tcount) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Clifford+T synthesis of single-qubit rotations", "ctsynth"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *c) {
    c->add_option("--seed", o.seed, "Random seed (default: nondeterministic)")
        ->each([&](const std::string &) { o.seed_given = true; });
    c->add_option("--parallel", o.parallel, "Worker threads drawing candidates")->check(CLI::Range(1, 256));
    c->add_option("--max-candidates", o.max_candidates, "Candidate budget per denominator exponent");
    c->add_flag("--json", o.json, "Machine-readable records");
  };

  CLI::App *synth = app.add_subcommand("synth", "Approximate Rz(theta) within epsilon");
  synth->add_option("--theta", o.theta, "Angle expression, e.g. pi/128")->required();
  synth->add_option("--epsilon", o.epsilon, "Tolerance, e.g. 1e-10")->required();
  synth->add_flag("--stats", o.stats, "Print run statistics");
  synth->add_flag("--verify", o.verify, "Re-verify the printed word");
  add_common(synth);

  CLI::App *su2 = app.add_subcommand("su2", "Approximate a special unitary matrix within epsilon");
  su2->add_option("--matrix", o.matrix, "Entries a b c d (row-major), each 're,im'")->required();
  su2->add_option("--epsilon", o.epsilon, "Tolerance")->required();
  su2->add_flag("--stats", o.stats, "Print run statistics");
  su2->add_flag("--verify", o.verify, "Print the certified error bound");
  add_common(su2);

  CLI::App *bench = app.add_subcommand("bench", "Repeated synthesis runs per epsilon");
  bench->add_option("--theta", o.theta, "Angle expression")->required();
  bench->add_option("--epsilons", o.epsilons, "Comma-separated tolerances")->required();
  bench->add_option("--runs", o.runs, "Runs per epsilon")->check(CLI::PositiveNumber);
  add_common(bench);

  CLI::App *verify = app.add_subcommand("verify", "Certified distance of a gate word from Rz(theta)");
  verify->add_option("--word", o.word, "Gate word, e.g. HTSH w^3")->required();
  verify->add_option("--theta", o.theta, "Angle expression")->required();
  verify->add_option("--epsilon", o.epsilon, "Fail with exit code 3 above this bound");

  CLI::App *enumerate = app.add_subcommand("enumerate", "Count distinct normal forms up to a T-count");
  enumerate->add_option("--tcount", o.tcount, "Maximum T-count")->required()->check(CLI::Range(0, 12));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(o, out, err);
    if (su2->parsed()) return cmd_su2(o, out, err);
    if (bench->parsed()) return cmd_bench(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_enumerate(o, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ctsynth::cli
