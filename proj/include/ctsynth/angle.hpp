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

// Angle expressions such as "3*pi/7", kept as a tree so they can be
// evaluated at any precision.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := number | 'pi' | '(' expr ')' | '-' factor
//
// Numbers are decimals with an optional exponent ("0.25", "1e-3") and are
// stored as exact rationals.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "ctsynth/high_prec.hpp"
#include "ctsynth/integer.hpp"

namespace ctsynth {

class AngleExpr {
 public:
  enum class Kind { Number, Pi, Neg, Add, Sub, Mul, Div };

  /// The angle 0.
  AngleExpr() : AngleExpr(Rational(0)) {}
  /// Literal. Negative values are stored as Neg of a literal so that the
  /// rendered text re-parses to the same tree.
  static AngleExpr number(const Rational &q);
  static AngleExpr pi();

  Kind kind() const { return node_->kind; }
  /// Literal value; only meaningful for Kind::Number.
  const Rational &value() const { return node_->value; }

  friend AngleExpr operator-(const AngleExpr &x);
  friend AngleExpr operator+(const AngleExpr &x, const AngleExpr &y);
  friend AngleExpr operator-(const AngleExpr &x, const AngleExpr &y);
  friend AngleExpr operator*(const AngleExpr &x, const AngleExpr &y);
  friend AngleExpr operator/(const AngleExpr &x, const AngleExpr &y);

  /// Structural equality of trees.
  friend bool operator==(const AngleExpr &x, const AngleExpr &y);

  /// Enclosure of the value with `prec`-bit endpoints. Throws
  /// std::domain_error on division by an interval containing zero.
  Interval enclose(Precision prec) const;

  /// Text with the fewest parentheses that re-parses to an equal tree.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Rational value;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit AngleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  explicit AngleExpr(const Rational &q);
  static AngleExpr binary(Kind k, const AngleExpr &x, const AngleExpr &y);

  std::shared_ptr<const Node> node_;
};

class AngleParseError : public std::invalid_argument {
 public:
  AngleParseError(const std::string &msg, std::size_t offset)
      : std::invalid_argument(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the grammar above. Whitespace is ignored; "π" is accepted for pi.
AngleExpr parse_angle(const std::string &text);

}  // namespace ctsynth
