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

#ifndef LOGDER_DERIVMOD_HPP
#define LOGDER_DERIVMOD_HPP

#include <vector>

#include "logder/config.hpp"
#include "logder/linalg.hpp"
#include "logder/poly.hpp"

namespace logder {

class SplittingFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A degree-d element of the restricted order-k derivation module: one
/// binary form per multi-index beta of degree k, in canonical order.  The
/// element acts on the dual form of P via the polarized value P^beta, so
/// membership means sum_j coeffs[j](s_i, t_i) * P_i^beta_j = 0 for every i.
struct DerivationElement {
  int k = 1;
  std::vector<BinaryForm> coeffs;

  int coefficient_degree() const;
};

/// The order-k Euler-type generator attached to gamma (|gamma| = k-1): the
/// coefficient in slot gamma + e_m is the restriction of Y_m.
struct EulerGenerator {
  MultiIndex gamma;
  DerivationElement element;
};

/// Sorted splitting exponents with the (a; eps_i; t_i) decomposition.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exps_; }
  int rank() const { return static_cast<int>(exps_.size()); }
  int a() const { return exps_.at(0); }
  /// Distinct gaps eps_0 = 0 < eps_1 < ... < eps_s.
  const std::vector<int>& gaps() const { return gaps_; }
  /// Multiplicity t_i of a + eps_i.
  const std::vector<int>& multiplicities() const { return mults_; }
  int s() const { return static_cast<int>(gaps_.size()) - 1; }
  /// Section count sum_i max(0, d - a_i + 1).
  long long section_count(int d) const;
  /// Grouped rendering like "1^3 2^4 3^2 4".
  std::string str() const;

  friend bool operator==(const SplittingType& x, const SplittingType& y) {
    return x.exps_ == y.exps_;
  }
  friend bool operator!=(const SplittingType& x, const SplittingType& y) {
    return !(x == y);
  }

 private:
  std::vector<int> exps_;
  std::vector<int> gaps_;
  std::vector<int> mults_;
};

struct SplittingResult {
  SplittingType type;
  std::vector<int> h0;       // measured dimensions for d = 0..cap
  std::vector<int> dk_dims;  // the unreduced module dimensions
  int cap = 0;
};

/// The multi-indices of degree k in n+1 variables, canonical order.  This
/// fixes the coefficient indexing shared by every operation below.
std::vector<MultiIndex> derivation_indices(int n, int k);

/// The r x (d+1)*C(n+k, n) point-condition matrix whose kernel is the
/// degree-d piece of the restricted module.
ExactMatrix dk_condition_matrix(const PointConfig& config, const LineChart& line,
                                int k, int d);
std::vector<DerivationElement> dk_basis(const PointConfig& config,
                                        const LineChart& line, int k, int d);
int dk_dim(const PointConfig& config, const LineChart& line, int k, int d);

std::vector<EulerGenerator> euler_generators(const PointConfig& config,
                                             const LineChart& line, int k);
/// Coefficient-space vectors of g * theta_gamma over all degree-(d-1)
/// monomials g and all gamma.
std::vector<ExactVector> euler_span_vectors(const PointConfig& config,
                                            const LineChart& line, int k, int d);
int euler_dim(const PointConfig& config, const LineChart& line, int k, int d);

/// Measure h0(d) = dk_dim - euler_dim upward from d = 0 and fit the unique
/// exponent multiset with h0(d) = sum max(0, d - a_i + 1).  degree_cap 0
/// auto-extends until the differences reach the module rank for two
/// consecutive degrees and the fit reproduces every measured value.
SplittingResult splitting_type(const PointConfig& config, const LineChart& line,
                               int k, int degree_cap = 0);

/// Fit an exponent multiset to the given section counts; empty optional when
/// no multiset is consistent.
std::vector<int> fit_exponents(const std::vector<int>& h, bool* ok);

/// Lift the binary-form coefficients to full-coordinate polynomials f_beta
/// with f_beta(sA + tB) = coeffs[beta](s, t).
std::vector<MultiPoly> lift_to_coordinates(const DerivationElement& element,
                                           const LineChart& line, int n);

/// Rows spanning the codimension-two subspace dual to the line: the kernel
/// of [A; B], as an (n-1) x (n+1) matrix.
ExactMatrix subspace_basis(const LineChart& line, int n);

/// F = sum_j f_beta_j(e_alpha(M)) X^beta_j where e_alpha(M_i) is the
/// determinant with the unit row in slot i, the variable row X, and the
/// rows of alpha.  alpha must have rank n-1.
MultiPoly eta_transform(const std::vector<MultiPoly>& theta_coeffs, int k,
                        const ExactMatrix& alpha);

}  // namespace logder

#endif  // LOGDER_DERIVMOD_HPP
