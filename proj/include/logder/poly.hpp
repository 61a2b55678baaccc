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

#ifndef LOGDER_POLY_HPP
#define LOGDER_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logder/scalar.hpp"

namespace logder {

/// Exponent tuple of a monomial.  The canonical enumeration within one
/// degree is lexicographically descending, so (k,0,...,0) comes first and
/// (0,...,0,k) last; across degrees, lower degree first.  This single order
/// fixes every coefficient-tuple index in the library.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);
  static MultiIndex zero(int nvars);
  static MultiIndex unit(int nvars, int slot);

  int vars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  MultiIndex plus(const MultiIndex& o) const;
  MultiIndex plus_unit(int slot) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) {
    return !(a == b);
  }
  /// Canonical (graded, lex-descending) order.
  static bool canonical_before(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> e_;
};

struct MultiIndexCanonicalLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return MultiIndex::canonical_before(a, b);
  }
};

/// All multi-indices of the given degree in canonical order; the count is
/// C(nvars - 1 + degree, nvars - 1).
std::vector<MultiIndex> monomials_of_degree(int nvars, int degree);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Dense binary form in (s, t): coefficient of s^(D-u) t^u sits at index u.
class BinaryForm {
 public:
  BinaryForm() : c_(1, Scalar(0L)) {}
  explicit BinaryForm(std::vector<Scalar> coeffs);
  static BinaryForm zero(int degree);
  static BinaryForm linear(const Scalar& cs, const Scalar& ct);  // cs*s + ct*t

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& coeff(int u) const { return c_[u]; }
  Scalar& coeff(int u) { return c_[u]; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const;

  Scalar evaluate(const Scalar& s, const Scalar& t) const;
  BinaryForm& operator+=(const BinaryForm& o);  // degrees must match
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Scalar& c, BinaryForm f);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  /// Multiply by the monomial s^a t^b.
  BinaryForm shifted(int a, int b) const;
  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

/// Sparse multivariate polynomial over Scalar.  Immutable in spirit: the
/// mutating helpers exist for construction only.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, const Scalar& c);
  static MultiPoly monomial(MultiIndex mi, const Scalar& c);
  static MultiPoly variable(int nvars, int slot);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  std::optional<int> homogeneous_degree() const;
  const std::map<MultiIndex, Scalar, MultiIndexCanonicalLess>& terms() const {
    return terms_;
  }
  Scalar coeff(const MultiIndex& mi) const;
  void add_term(const MultiIndex& mi, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  MultiPoly pow(unsigned k) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Iterated partial derivative by alpha.
  MultiPoly derive(const MultiIndex& alpha) const;
  MultiPoly derive1(int var) const;
  /// Substitution Y -> s A + t B; requires a homogeneous polynomial and
  /// linearly independent A, B.
  BinaryForm restrict_line(std::span<const Scalar> A, std::span<const Scalar> B) const;
  /// Substitute variable i by the linear form rows[i] . X'.
  MultiPoly substitute_linear(const std::vector<std::vector<Scalar>>& rows) const;
  /// Substitute variable i by vals[i] (arbitrary polynomials, same nvars).
  MultiPoly substitute_polys(const std::vector<MultiPoly>& vals) const;
  /// Divide by the gcd of all integer coefficient data and fix the sign of
  /// the canonically-first term positive.  Zero stays zero.
  MultiPoly primitive_part() const;

  /// Canonical rendering: graded-lex with the highest degree first,
  /// explicit '^' and '*'.
  std::string str(std::string_view var_prefix = "X") const;
  static MultiPoly parse(std::string_view text, int nvars,
                         std::string_view var_prefix, const FieldSpec* field);

 private:
  int nvars_;
  std::map<MultiIndex, Scalar, MultiIndexCanonicalLess> terms_;
};

}  // namespace logder

#endif  // LOGDER_POLY_HPP
