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

#ifndef ROBSEL_RATIONAL_HPP
#define ROBSEL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace robsel {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// All arithmetic is exact; values are kept in lowest terms with a positive
/// denominator (GMP's canonical form). This is the only numeric type used for
/// costs, budgets and dual values throughout the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(const mpq_class& q) : v_(q) {}
  explicit Rational(mpq_class&& q) : v_(std::move(q)) {}

  /// Parses "123", "-4.25" or "7/2" exactly. Throws std::invalid_argument on
  /// malformed input (scientific notation is rejected on purpose).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpq_class& raw() { return v_; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// True when stored in lowest terms with positive denominator. Used by the
  /// debug assertion hook; GMP keeps this invariant after canonicalize().
  bool is_canonical() const;

  /// "5/2" for non-integers, "3" for integers.
  std::string to_string() const;

  /// Exact decimal rendering; only defined when the denominator is of the
  /// form 2^a*5^b. Throws std::domain_error otherwise.
  std::string to_decimal_string() const;

  /// True iff denominator is 2^a*5^b (i.e. the value has a finite decimal
  /// expansion).
  bool has_finite_decimal() const;

  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// max{0, r}; the positive-part operator written [.]_+ in the formulas.
inline Rational pos(const Rational& r) { return r.sign() > 0 ? r : Rational(0); }

/// Floor/ceil to an integer-valued Rational.
Rational floor(const Rational& r);
Rational ceil(const Rational& r);

}  // namespace robsel

#endif  // ROBSEL_RATIONAL_HPP
