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

#include "ctsynth/angle.hpp"

#include <cctype>

namespace ctsynth {

namespace {

bool is_decimal(const Rational &q) {
  Integer d = q.get_den();
  for (unsigned long p : {2UL, 5UL})
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p;
  return d == 1;
}

int precedence(AngleExpr::Kind k) {
  switch (k) {
    case AngleExpr::Kind::Add:
    case AngleExpr::Kind::Sub:
      return 1;
    case AngleExpr::Kind::Mul:
    case AngleExpr::Kind::Div:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

AngleExpr::AngleExpr(const Rational &q)
    : node_(std::make_shared<const Node>(Node{Kind::Number, q, nullptr, nullptr})) {}

AngleExpr AngleExpr::number(const Rational &q) {
  if (q < 0) return -number(-q);
  if (is_decimal(q)) return AngleExpr(q);
  return AngleExpr(Rational(q.get_num())) / AngleExpr(Rational(q.get_den()));
}

AngleExpr AngleExpr::pi() {
  return AngleExpr(std::make_shared<const Node>(Node{Kind::Pi, 0, nullptr, nullptr}));
}

AngleExpr AngleExpr::binary(Kind k, const AngleExpr &x, const AngleExpr &y) {
  return AngleExpr(std::make_shared<const Node>(Node{k, 0, x.node_, y.node_}));
}

AngleExpr operator-(const AngleExpr &x) {
  return AngleExpr(std::make_shared<const AngleExpr::Node>(
      AngleExpr::Node{AngleExpr::Kind::Neg, 0, x.node_, nullptr}));
}
AngleExpr operator+(const AngleExpr &x, const AngleExpr &y) {
  return AngleExpr::binary(AngleExpr::Kind::Add, x, y);
}
AngleExpr operator-(const AngleExpr &x, const AngleExpr &y) {
  return AngleExpr::binary(AngleExpr::Kind::Sub, x, y);
}
AngleExpr operator*(const AngleExpr &x, const AngleExpr &y) {
  return AngleExpr::binary(AngleExpr::Kind::Mul, x, y);
}
AngleExpr operator/(const AngleExpr &x, const AngleExpr &y) {
  return AngleExpr::binary(AngleExpr::Kind::Div, x, y);
}

bool operator==(const AngleExpr &x, const AngleExpr &y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case AngleExpr::Kind::Number:
      return x.value() == y.value();
    case AngleExpr::Kind::Pi:
      return true;
    case AngleExpr::Kind::Neg:
      return AngleExpr(x.node_->lhs) == AngleExpr(y.node_->lhs);
    default:
      return AngleExpr(x.node_->lhs) == AngleExpr(y.node_->lhs) &&
             AngleExpr(x.node_->rhs) == AngleExpr(y.node_->rhs);
  }
}

Interval AngleExpr::enclose(Precision prec) const {
  switch (kind()) {
    case Kind::Number:
      return Interval::of(value(), prec);
    case Kind::Pi:
      return Interval::pi(prec);
    case Kind::Neg:
      return -AngleExpr(node_->lhs).enclose(prec);
    default:
      break;
  }
  Interval l = AngleExpr(node_->lhs).enclose(prec);
  Interval r = AngleExpr(node_->rhs).enclose(prec);
  switch (kind()) {
    case Kind::Add:
      return l + r;
    case Kind::Sub:
      return l - r;
    case Kind::Mul:
      return l * r;
    default:
      return l / r;
  }
}

std::string AngleExpr::to_string() const {
  // An operand is parenthesized when it binds looser than its slot needs.
  // Right operands of binary operators need strictly tighter binding, since
  // the grammar associates to the left.
  auto at = [](const std::shared_ptr<const Node> &n, int need) {
    std::string s = AngleExpr(n).to_string();
    return precedence(n->kind) < need ? "(" + s + ")" : s;
  };
  switch (kind()) {
    case Kind::Number:
      return to_decimal_string(value());
    case Kind::Pi:
      return "pi";
    case Kind::Neg:
      return "-" + at(node_->lhs, 3);
    default:
      break;
  }
  int p = precedence(kind());
  const char *op = kind() == Kind::Add ? "+" : kind() == Kind::Sub ? "-" : kind() == Kind::Mul ? "*" : "/";
  return at(node_->lhs, p) + op + at(node_->rhs, p + 1);
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string &text) : s_(text) {}

  AngleExpr parse() {
    AngleExpr e = expr();
    skip();
    if (pos_ != s_.size()) throw AngleParseError("unexpected character", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  AngleExpr expr() {
    AngleExpr e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  AngleExpr term() {
    AngleExpr e = factor();
    for (;;) {
      if (eat('*'))
        e = e * factor();
      else if (eat('/'))
        e = e / factor();
      else
        return e;
    }
  }

  AngleExpr factor() {
    skip();
    if (pos_ >= s_.size()) throw AngleParseError("unexpected end of input", pos_);
    if (eat('-')) return -factor();
    if (eat('(')) {
      AngleExpr e = expr();
      if (!eat(')')) throw AngleParseError("expected ')'", pos_);
      return e;
    }
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return AngleExpr::pi();
    }
    if (s_.compare(pos_, 2, "\xCF\x80") == 0) {
      pos_ += 2;
      return AngleExpr::pi();
    }
    return number();
  }

  AngleExpr number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t n = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) throw AngleParseError("expected a number, 'pi' or '('", start);
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw AngleParseError("malformed exponent", pos_);
    }
    return AngleExpr::number(parse_decimal(s_.substr(start, pos_ - start)));
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

}  // namespace

AngleExpr parse_angle(const std::string &text) { return Parser(text).parse(); }

}  // namespace ctsynth
