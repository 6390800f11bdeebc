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

// One-dimensional grid problems: find α ∈ Z[√2] with α ∈ [x0, x1] and
// α• ∈ [y0, y1].
//
// Endpoints are exact elements of Q(√2). This keeps the λ-rescaling and the
// floor computations of the construction exact, so a returned α is inside
// the intervals with no rounding caveat. Callers holding only enclosures of
// an endpoint pass the inner end of the enclosure (GridProblem::inner).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctsynth/high_prec.hpp"
#include "ctsynth/integer.hpp"
#include "ctsynth/ring.hpp"

namespace ctsynth {

/// a + b√2 with rational a, b.
class QRootTwo {
 public:
  QRootTwo() = default;
  QRootTwo(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  QRootTwo(long a) : a_(a), b_(0) {}
  QRootTwo(const ZRootTwo &x) : a_(x.a()), b_(x.b()) {}
  /// The exact dyadic value of v.
  explicit QRootTwo(const HighPrecReal &v) : a_(v.to_rational()), b_(0) {}

  const Rational &a() const { return a_; }
  const Rational &b() const { return b_; }

  static QRootTwo sqrt2() { return {0, 1}; }

  QRootTwo bullet() const { return {a_, -b_}; }
  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  double to_double() const;

  QRootTwo operator-() const { return {-a_, -b_}; }
  friend QRootTwo operator+(const QRootTwo &x, const QRootTwo &y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QRootTwo operator-(const QRootTwo &x, const QRootTwo &y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QRootTwo operator*(const QRootTwo &x, const QRootTwo &y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const QRootTwo &x, const QRootTwo &y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend int compare(const QRootTwo &x, const QRootTwo &y) { return (x - y).sign(); }
  friend bool operator<(const QRootTwo &x, const QRootTwo &y) { return compare(x, y) < 0; }
  friend bool operator<=(const QRootTwo &x, const QRootTwo &y) { return compare(x, y) <= 0; }

  std::string to_string() const;

 private:
  Rational a_ = 0, b_ = 0;
};

struct GridProblem {
  QRootTwo x0, x1, y0, y1;

  QRootTwo delta() const { return x1 - x0; }
  QRootTwo Delta() const { return y1 - y0; }
  /// δΔ >= (1+√2)², the regime where a solution is guaranteed.
  bool guaranteed() const;

  /// Exact membership of α in [x0, x1] and α• in [y0, y1].
  bool contains(const ZRootTwo &alpha) const;

  /// The problem whose solutions are exactly λ^n α for solutions α of this
  /// one: [λ^n x0, λ^n x1] × (λ•)^n [y0, y1].
  GridProblem rescale(long n) const;

  /// Problem built from enclosures of the endpoints, using the inner end of
  /// each so that every solution also solves the true problem.
  static GridProblem inner(const Interval &x0, const Interval &x1, const Interval &y0,
                           const Interval &y1);
};

struct GridStats {
  /// |n| for the λ^n rescaling applied.
  long rescale_steps = 0;
};

enum class Parity { Even, Odd };

/// Some solution, or nullopt if none was found. Always finds one when
/// gp.guaranteed().
std::optional<ZRootTwo> solve_grid(const GridProblem &gp, GridStats *stats = nullptr);

/// Solution a + b√2 whose a has the given parity. Always finds one when
/// δΔ >= 2(1+√2)².
std::optional<ZRootTwo> solve_grid_parity(const GridProblem &gp, Parity parity,
                                          GridStats *stats = nullptr);

/// Every solution with |a|, |b| <= bound, by exhaustive search. A negative
/// bound means no limit beyond the intervals themselves.
std::vector<ZRootTwo> count_solutions_bruteforce(const GridProblem &gp, long bound);

}  // namespace ctsynth
