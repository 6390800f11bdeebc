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

// Python bindings. Angles and tolerances cross the boundary as strings so
// that values such as "pi/128" and "1e-100" stay exact.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctsynth/approx.hpp"
#include "ctsynth/exact_synth.hpp"
#include "ctsynth/verify.hpp"

namespace py = pybind11;
using namespace ctsynth;

namespace {

Rational to_epsilon(const std::string &text) { return parse_decimal(text); }

py::dict stats_dict(const SynthStats &s) {
  py::dict d;
  d["k_initial"] = s.k_initial;
  d["k"] = s.k;
  d["t_count"] = s.t_count;
  d["error_bound"] = s.error_bound.to_double();
  d["candidates"] = s.candidates_tried;
  d["slot_failures"] = s.slot_failures;
  d["runtime_s"] = s.wall_time_s;
  return d;
}

SynthLimits make_limits(int workers, std::size_t max_candidates) {
  SynthLimits lim;
  lim.workers = workers;
  lim.max_candidates_per_k = max_candidates;
  return lim;
}

}  // namespace

PYBIND11_MODULE(_ctsynth, m) {
  m.doc() = "Clifford+T synthesis of single-qubit unitaries";
  py::register_exception<SynthesisError>(m, "SynthesisError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const AngleParseError &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "approximate_rz",
      [](const std::string &theta, const std::string &epsilon, std::uint64_t seed, int workers,
         std::size_t max_candidates) {
        AngleExpr th = parse_angle(theta);
        Rational eps = to_epsilon(epsilon);
        Rng rng(seed);
        RzApproximation r;
        {
          py::gil_scoped_release release;
          r = approximate_rz(th, eps, rng, make_limits(workers, max_candidates));
        }
        py::dict d = stats_dict(r.stats);
        d["word"] = format_word(r.word);
        return d;
      },
      py::arg("theta"), py::arg("epsilon"), py::arg("seed") = 0, py::arg("workers") = 1,
      py::arg("max_candidates") = 0,
      "Approximate Rz(theta) within epsilon; returns the word and run statistics.");

  m.def(
      "approximate_su2",
      [](const std::array<std::complex<double>, 4> &matrix, const std::string &epsilon, std::uint64_t seed) {
        Rational eps = to_epsilon(epsilon);
        Matrix2 target = Matrix2::from_complex(matrix, 256);
        Rng rng(seed);
        Su2Approximation r;
        {
          py::gil_scoped_release release;
          r = approximate_su2(target, eps, rng, SynthLimits{});
        }
        py::dict d;
        d["word"] = format_word(r.word);
        d["t_count"] = t_count(r.word);
        d["error_bound"] = r.error_bound.to_double();
        d["euler_angles"] = py::make_tuple(r.beta.to_double(), r.gamma.to_double(), r.delta.to_double());
        return d;
      },
      py::arg("matrix"), py::arg("epsilon"), py::arg("seed") = 0,
      "Approximate a 2x2 special unitary [a, b, c, d] (row-major) within epsilon.");

  m.def(
      "verify",
      [](const std::string &word, const std::string &theta) {
        return op_norm_error(evaluate_word(parse_word(word)), parse_angle(theta)).to_double();
      },
      py::arg("word"), py::arg("theta"), "Certified upper bound on ||word - Rz(theta)||.");

  m.def(
      "t_count", [](const std::string &word) { return t_count(parse_word(word)); }, py::arg("word"));
  m.def(
      "normalize", [](const std::string &word) { return format_word(exact_synthesize(evaluate_word(parse_word(word)))); },
      py::arg("word"), "Canonical T-optimal word for the same operator.");
  m.def("count_normal_forms", &count_distinct_normal_forms, py::arg("max_t"));
  m.def(
      "lower_bound_tcount", [](const std::string &epsilon) { return lower_bound_tcount(to_epsilon(epsilon)); },
      py::arg("epsilon"));
}
