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

#ifndef LOGDER_LINALG_HPP
#define LOGDER_LINALG_HPP

#include <Eigen/Core>

#include <vector>

#include "logder/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<logder::Scalar> {
  using Real = logder::Scalar;
  using NonInteger = logder::Scalar;
  using Literal = logder::Scalar;
  using Nested = logder::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return logder::Scalar(0L); }
  static inline Real dummy_precision() { return logder::Scalar(0L); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace logder {

using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class PivotRule { kFirstNonzero, kLastNonzero };

/// Exact rank by fraction-free (Bareiss) elimination.  Cyclotomic entries
/// are handled by clearing the shared row denominators first.
int rank_of(const ExactMatrix& m, PivotRule rule = PivotRule::kFirstNonzero);

/// Canonical basis of the right kernel, ordered by ascending free column.
/// Each vector is scaled to integer content 1 with the first nonzero entry
/// sign-positive.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

Scalar determinant_of(const ExactMatrix& m);
ExactMatrix inverse_of(const ExactMatrix& m);

ExactMatrix matrix_from_rows(const std::vector<std::vector<Scalar>>& rows, int cols);
ExactMatrix matrix_from_rows(const std::vector<ExactVector>& rows, int cols);

/// Rank of the span of the given vectors.
int span_rank(const std::vector<ExactVector>& vectors, int dim);
/// True when v lies in the span of the basis vectors.
bool in_span(const std::vector<ExactVector>& basis, const ExactVector& v);

/// Clear denominators, divide by content, make the first nonzero entry
/// sign-positive.  Zero vectors pass through.
void normalize_primitive(ExactVector& v);

}  // namespace logder

#endif  // LOGDER_LINALG_HPP
