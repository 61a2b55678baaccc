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

#ifndef LOGDER_UNEXPECT_HPP
#define LOGDER_UNEXPECT_HPP

#include <vector>

#include "logder/config.hpp"
#include "logder/derivmod.hpp"

namespace logder {

class FormulaMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conditions imposed on degree d+k forms by multiplicity d along a general
/// codimension-two subspace of P^n.  Evaluates both the direct sum and the
/// closed form; a disagreement is a hard error.
long long codim2_conditions(int n, int d, int k);

/// Conditions imposed by an m-fold point in P^n: C(m-1+n, n).
long long fat_point_conditions(int m, int n);

/// C(d+k+n, n) - codim2_conditions(n, d, k) - simple_count
///   - sum of fat-point conditions.  Points promoted to fat points must
/// already be excluded from simple_count by the caller.
long long vdim(int n, int k, int d, long long simple_count,
               const std::vector<int>& fat_multiplicities = {});

/// dim [I(Z) cap I(H)^d]_D computed by the monomial-support method in the
/// line frame.  The basis vectors live on the kept monomials.
struct AdimSystem {
  std::vector<MultiIndex> monomials;  // degree-D monomials with e0 + e1 >= d
  std::vector<ExactVector> kernel;    // coefficient vectors over `monomials`
  LineFrame frame;
};
AdimSystem adim_system(const PointConfig& config, const LineChart& line, int d,
                       int D, bool alternate_frame = false);
long long adim(const PointConfig& config, const LineChart& line, int d, int D);

/// |Z| minus the rank of the degree-D evaluation matrix of Z.
long long z_deficiency(const PointConfig& config, int D);

/// The numerical criterion on a splitting type: value
/// sum_{i=j+1}^{s} t_i (eps_i - eps_j - 1); positive value flags the type
/// (a + eps_j + k, a + eps_j) as unexpected.
struct CriterionResult {
  long long value = 0;
  bool unexpected = false;
  int type_degree = 0;        // a + eps_j + k
  int type_multiplicity = 0;  // a + eps_j
};
CriterionResult criterion(const SplittingType& st, int j, int k);

}  // namespace logder

#endif  // LOGDER_UNEXPECT_HPP
