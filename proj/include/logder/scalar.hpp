/*
   Copyright 2026 The logder authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOGDER_SCALAR_HPP
#define LOGDER_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logder {

class FieldMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cyclotomic field Q(zeta_m), reduced modulo the m-th cyclotomic
/// polynomial Phi_m.  Conductor 1 is the rationals.  Instances are interned:
/// two FieldSpec pointers compare equal iff the fields are the same.
class FieldSpec {
 public:
  static const FieldSpec* rationals();
  static const FieldSpec* cyclotomic(unsigned conductor);

  unsigned conductor() const { return m_; }
  /// Extension degree phi(m); 1 for the rationals.
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Phi_m, monic, coefficients in ascending order of the power of x.
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  bool is_rational() const { return m_ == 1; }
  std::string name() const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  explicit FieldSpec(unsigned m);
  unsigned m_;
  std::vector<mpz_class> modulus_;
};

/// An element of Q(zeta_m): a polynomial in the primitive root with integer
/// coefficients over a single positive denominator.  The representation is
/// canonical: the polynomial part is reduced mod Phi_m, the gcd of all
/// numerator coefficients and the denominator is 1, and the denominator is
/// positive.  Values are immutable once constructed; all operations are pure.
class Scalar {
 public:
  Scalar() : Scalar(0L) {}
  Scalar(long v);
  Scalar(const mpz_class& v);
  static Scalar rational(mpz_class num, mpz_class den);
  static Scalar zero(const FieldSpec* f);
  static Scalar one(const FieldSpec* f);
  /// The primitive root e of the field; rejects the rationals.
  static Scalar root_of_unity(const FieldSpec* f);
  /// Build from raw data; canonicalizes.
  static Scalar make(const FieldSpec* f, std::vector<mpz_class> num, mpz_class den);

  const FieldSpec* field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_integral() const { return den_ == 1; }
  /// True when the value lies in Q (even if the carrier field is larger).
  bool is_rational_value() const;
  /// Sign of the first nonzero numerator coefficient; 0 for zero.  Used to
  /// normalize canonical kernel vectors.
  int sign_key() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(unsigned long e) const;
  /// Image under the field automorphism e -> e^j (gcd(j, m) = 1).
  Scalar substitute_root(unsigned j) const;

  /// Canonical text rendering; parse() accepts the same syntax.
  std::string str() const;
  /// Parse an expression in integers, '/', '*', '^', parentheses and the
  /// symbol `e` (primitive root of the given field).  `e` is rejected over
  /// the rationals.
  static Scalar parse(std::string_view text, const FieldSpec* field);

  /// The common field of two operands; rational values promote into larger
  /// fields, anything else mismatches.
  static const FieldSpec* common_field(const FieldSpec* a, const FieldSpec* b);

 private:
  Scalar(const FieldSpec* f, std::vector<mpz_class> num, mpz_class den);
  void canonicalize();
  Scalar promoted(const FieldSpec* f) const;

  const FieldSpec* field_;
  std::vector<mpz_class> num_;  // length = field degree
  mpz_class den_;               // > 0
};

}  // namespace logder

#endif  // LOGDER_SCALAR_HPP
