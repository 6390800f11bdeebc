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

#include "ctsynth/unitary.hpp"

#include <cctype>
#include <stdexcept>

namespace ctsynth {

UnitaryDOmega::UnitaryDOmega(ZOmega m00, ZOmega m01, ZOmega m10, ZOmega m11, long k)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)}, k_(k) {
  if (k < 0) throw std::invalid_argument("UnitaryDOmega: negative denominator exponent");
}

UnitaryDOmega UnitaryDOmega::from_columns(const ZOmega &u, const ZOmega &t, long k) {
  return {u, -t.dagger(), t, u.dagger(), k};
}

UnitaryDOmega UnitaryDOmega::reduce() const {
  UnitaryDOmega r = *this;
  auto divisible = [&] {
    for (const ZOmega &x : r.m_)
      if (!x.divisible_by_sqrt2()) return false;
    return true;
  };
  while (r.k_ > 0 && divisible()) {
    for (ZOmega &x : r.m_) x = x.div_sqrt2();
    --r.k_;
  }
  return r;
}

UnitaryDOmega UnitaryDOmega::dagger() const {
  return {m_[0].dagger(), m_[2].dagger(), m_[1].dagger(), m_[3].dagger(), k_};
}

UnitaryDOmega UnitaryDOmega::mul_omega_pow(long j) const {
  return {m_[0].mul_omega_pow(j), m_[1].mul_omega_pow(j), m_[2].mul_omega_pow(j), m_[3].mul_omega_pow(j),
          k_};
}

UnitaryDOmega operator*(const UnitaryDOmega &x, const UnitaryDOmega &y) {
  const auto &a = x.m_;
  const auto &b = y.m_;
  return UnitaryDOmega(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                       a[2] * b[1] + a[3] * b[3], x.k_ + y.k_)
      .reduce();
}

bool operator==(const UnitaryDOmega &x, const UnitaryDOmega &y) {
  const UnitaryDOmega rx = x.reduce(), ry = y.reduce();
  return rx.k_ == ry.k_ && rx.m_ == ry.m_;
}

bool UnitaryDOmega::is_unitary() const { return dagger() * *this == UnitaryDOmega(); }

DOmega UnitaryDOmega::determinant() const { return {m_[0] * m_[3] - m_[1] * m_[2], 2 * k_}; }

std::optional<int> UnitaryDOmega::determinant_omega_power() const {
  const DOmega d = determinant().reduce();
  if (d.k() != 0) return std::nullopt;
  for (int j = 0; j < 8; ++j)
    if (d.num() == ZOmega::omega_pow(j)) return j;
  return std::nullopt;
}

std::string UnitaryDOmega::key() const {
  const UnitaryDOmega r = reduce();
  std::string s = std::to_string(r.k_);
  for (const ZOmega &x : r.m_) {
    s += '|';
    s += x.a().get_str() + ',' + x.b().get_str() + ',' + x.c().get_str() + ',' + x.d().get_str();
  }
  return s;
}

std::string UnitaryDOmega::to_string() const {
  return "[[" + m_[0].to_string() + ", " + m_[1].to_string() + "], [" + m_[2].to_string() + ", " +
         m_[3].to_string() + "]]/√2^" + std::to_string(k_);
}

// --------------------------------------------------------------------- gates

UnitaryDOmega gate_matrix(Gate g) {
  const ZOmega i(0, 1, 0, 0), w = ZOmega::omega();
  switch (g) {
    case Gate::H:
      return {1, 1, 1, -1, 1};
    case Gate::S:
      return {1, 0, 0, i, 0};
    case Gate::T:
      return {1, 0, 0, w, 0};
    case Gate::X:
      return {0, 1, 1, 0, 0};
    case Gate::W:
      return {w, 0, 0, w, 0};
  }
  throw std::invalid_argument("gate_matrix: unknown gate");
}

UnitaryDOmega evaluate_word(const GateWord &w) {
  static const UnitaryDOmega kH = gate_matrix(Gate::H), kS = gate_matrix(Gate::S), kT = gate_matrix(Gate::T),
                             kX = gate_matrix(Gate::X), kW = gate_matrix(Gate::W);
  UnitaryDOmega m;
  for (Gate g : w) {
    switch (g) {
      case Gate::H:
        m = m * kH;
        break;
      case Gate::S:
        m = m * kS;
        break;
      case Gate::T:
        m = m * kT;
        break;
      case Gate::X:
        m = m * kX;
        break;
      case Gate::W:
        m = m * kW;
        break;
    }
  }
  return m;
}

std::size_t t_count(const GateWord &w) {
  std::size_t n = 0;
  for (Gate g : w) n += g == Gate::T;
  return n;
}

std::string format_word(const GateWord &w) {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] != Gate::W) {
      s += static_cast<char>(w[i]);
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (i < w.size() && w[i] == Gate::W) {
      ++i;
      ++j;
    }
    if (j % 8 != 0) s += "w^" + std::to_string(j % 8);
  }
  return s;
}

namespace {

// Value of a superscript digit starting at text[i], with its byte length.
std::optional<std::pair<int, std::size_t>> superscript_digit(const std::string &text, std::size_t i) {
  auto byte = [&](std::size_t j) { return j < text.size() ? static_cast<unsigned char>(text[j]) : 0u; };
  if (byte(i) == 0xC2) {
    if (byte(i + 1) == 0xB9) return std::pair{1, std::size_t{2}};
    if (byte(i + 1) == 0xB2) return std::pair{2, std::size_t{2}};
    if (byte(i + 1) == 0xB3) return std::pair{3, std::size_t{2}};
  }
  if (byte(i) == 0xE2 && byte(i + 1) == 0x81) {
    const unsigned c = byte(i + 2);
    if (c == 0xB0) return std::pair{0, std::size_t{3}};
    if (c >= 0xB4 && c <= 0xB9) return std::pair{static_cast<int>(c - 0xB0), std::size_t{3}};
  }
  return std::nullopt;
}

}  // namespace

GateWord parse_word(const std::string &text) {
  GateWord w;
  std::size_t i = 0;
  auto fail = [&](std::size_t pos, const std::string &why) {
    throw std::invalid_argument("invalid gate word at offset " + std::to_string(pos) + ": " + why);
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == 'H' || c == 'S' || c == 'T' || c == 'X') {
      w.push_back(static_cast<Gate>(c));
      ++i;
      continue;
    }
    if (c == 'W' || c == 'w') {
      ++i;
    } else if (c == 0xCF && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x89) {
      i += 2;  // ω
    } else {
      fail(i, std::string("unexpected character '") + text[i] + "'");
    }
    // Optional exponent: ^digits or superscript digits.
    unsigned long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t d = i;
      while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
      if (d == i) fail(i, "missing exponent");
      if (d - i > 9) fail(i, "exponent too long");
      e = std::stoul(text.substr(i, d - i));
      i = d;
    } else if (auto sd = superscript_digit(text, i)) {
      e = 0;
      while (auto digit = superscript_digit(text, i)) {
        if (e > 100000000UL) fail(i, "exponent too long");
        e = 10 * e + static_cast<unsigned long>(digit->first);
        i += digit->second;
      }
    }
    for (unsigned long j = 0; j < e % 8; ++j) w.push_back(Gate::W);
  }
  return w;
}

}  // namespace ctsynth
