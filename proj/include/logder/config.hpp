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

#ifndef LOGDER_CONFIG_HPP
#define LOGDER_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logder/linalg.hpp"
#include "logder/poly.hpp"
#include "logder/scalar.hpp"

namespace logder {

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite point configuration in P^n over the declared field.
struct PointConfig {
  int n = 0;
  const FieldSpec* field = FieldSpec::rationals();
  std::vector<std::vector<Scalar>> points;  // each of length n+1, nonzero
  std::vector<std::string> labels;          // empty, or one per point

  int r() const { return static_cast<int>(points.size()); }
};

/// Parse the line-oriented points format:
///   # comment
///   field rational | field cyclotomic M
///   dim N
///   point c0 c1 ... cN [label]
/// Scalars use the syntax of Scalar::parse and may not contain spaces.
PointConfig parse_points(std::string_view text);

/// The dual linear form P . Y of a point.
MultiPoly dual_form(const std::vector<Scalar>& point);

struct ArrangementData {
  MultiPoly f;                     // product of the dual forms, degree r
  std::vector<MultiPoly> jacobian;  // the n+1 partial derivatives of f
};
ArrangementData arrangement_data(const PointConfig& config);

/// A certified generic line span(A, B) in the dual space.
struct LineChart {
  std::vector<Scalar> A, B;  // integer coordinates
  std::uint64_t seed = 0;
  /// Canonical representatives of the r intersection parameters
  /// (s_i : t_i) with l_i(s_i A + t_i B) = 0; pairwise distinct.
  std::vector<std::pair<Scalar, Scalar>> intersection_params;
  bool certified = false;
};

/// Draw A, B with integer coordinates in [-coeff_bound, coeff_bound] from a
/// deterministic splitmix64 stream and certify all LineChart invariants
/// exactly, re-drawing on failure.  Throws GenericityError when the retry
/// budget is exhausted.
LineChart sample_line(const PointConfig& config, std::uint64_t seed,
                      long coeff_bound = 101, int max_attempts = 64);

/// Certify a caller-chosen line; throws GenericityError when an invariant
/// fails.
LineChart certify_line(const PointConfig& config, std::vector<Scalar> A,
                       std::vector<Scalar> B);

/// Invertible change of coordinates sending A . X and B . X to the first two
/// coordinates.  fwd has rows (A, B, completion); X' = fwd * X.  The
/// alternate frame completes with the opposite unit-row scan, for
/// independence checks.
struct LineFrame {
  ExactMatrix fwd;
  ExactMatrix inv;
};
LineFrame line_frame(const LineChart& line, int n, bool alternate = false);

/// Deterministic PRNG used for all sampling in the library.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform draw in [lo, hi].
  long draw(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace logder

#endif  // LOGDER_CONFIG_HPP
