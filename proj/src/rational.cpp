// Copyright 2026 The robsel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robsel/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace robsel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal: '" + std::string(text) + "'");

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    mpq_class q(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
  }

  auto dot = s.find('.');
  std::string digits;
  size_t frac_len = 0;
  if (dot == std::string_view::npos) {
    if (!all_digits(s))
      throw std::invalid_argument("malformed numeric literal: '" + std::string(text) + "'");
    digits = std::string(s);
  } else {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = fp.size();
    if (digits.empty())
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
  }
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

bool Rational::is_canonical() const {
  if (v_.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return g == 1 || (v_.get_num() == 0 && v_.get_den() == 1);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::has_finite_decimal() const {
  mpz_class d = v_.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
  return d == 1;
}

std::string Rational::to_decimal_string() const {
  if (is_integer()) return v_.get_num().get_str();
  mpz_class d = v_.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  if (d != 1) throw std::domain_error("rational " + to_string() + " has no finite decimal expansion");
  unsigned long places = std::max(twos, fives);
  mpz_class scaled = v_.get_num();
  for (unsigned long i = 0; i < places - twos; ++i) scaled *= 2;
  for (unsigned long i = 0; i < places - fives; ++i) scaled *= 5;
  bool neg = scaled < 0;
  mpz_class mag = neg ? mpz_class(-scaled) : scaled;
  std::string s = mag.get_str();
  if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
  s.insert(s.size() - places, ".");
  if (neg) s.insert(0, "-");
  return s;
}

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return Rational(mpq_class(q));
}

Rational ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return Rational(mpq_class(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace robsel
