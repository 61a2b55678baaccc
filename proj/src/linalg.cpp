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

#include "logder/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace logder {

namespace {

// Scale each row to a shared denominator of 1 (kernel and rank are
// invariant under row scaling).
void clear_row_denominators(ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const mpz_class& d = m(i, j).denominator();
      l = l / gcd(l, d) * d;
    }
    if (l == 1) continue;
    Scalar f{l};
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= f;
  }
}

struct Echelon {
  ExactMatrix w;                      // fraction-free row echelon
  std::vector<Eigen::Index> pivot_cols;  // one per pivot row, ascending
};

// Fraction-free forward elimination (Bareiss).  Divisions are exact in the
// subring generated by the entries; we assert integrality after each one.
Echelon bareiss(ExactMatrix w, PivotRule rule) {
  clear_row_denominators(w);
  const Eigen::Index rows = w.rows(), cols = w.cols();
  Echelon e;
  Scalar prev(1L);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    if (rule == PivotRule::kFirstNonzero) {
      for (Eigen::Index i = r; i < rows; ++i)
        if (!w(i, c).is_zero()) { pr = i; break; }
    } else {
      for (Eigen::Index i = rows - 1; i >= r; --i)
        if (!w(i, c).is_zero()) { pr = i; break; }
    }
    if (pr < 0) continue;
    if (pr != r) w.row(pr).swap(w.row(r));
    const Scalar pivot = w(r, c);
    const Scalar prev_inv = prev.inverse();
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Scalar factor = w(i, c);
      if (factor.is_zero()) {
        for (Eigen::Index j = c + 1; j < cols; ++j)
          w(i, j) = w(i, j) * pivot * prev_inv;
        continue;
      }
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Scalar v = (w(i, j) * pivot - factor * w(r, j)) * prev_inv;
        w(i, j) = std::move(v);
      }
      w(i, c) = Scalar(0L);
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.w = std::move(w);
  return e;
}

const FieldSpec* field_of(const ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).field()->is_rational()) return m(i, j).field();
  return FieldSpec::rationals();
}

}  // namespace

int rank_of(const ExactMatrix& m, PivotRule rule) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(bareiss(m, rule).pivot_cols.size());
}

void normalize_primitive(ExactVector& v) {
  mpz_class den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const mpz_class& d = v(i).denominator();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  mpz_class content = 0;
  int lead_sign = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class scale = den_lcm / v(i).denominator();
    for (const auto& x : v(i).numerators()) content = gcd(content, abs(x * scale));
    if (lead_sign == 0) lead_sign = v(i).sign_key();
  }
  if (content == 0) return;  // zero vector
  Scalar f = Scalar::rational(lead_sign < 0 ? -den_lcm : den_lcm, content);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= f;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  const Eigen::Index cols = m.cols();
  std::vector<ExactVector> out;
  if (cols == 0) return out;
  const FieldSpec* f = field_of(m);
  if (m.rows() == 0) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      ExactVector v = ExactVector::Constant(cols, Scalar::zero(f));
      v(c) = Scalar::one(f);
      out.push_back(std::move(v));
    }
    return out;
  }
  Echelon e = bareiss(m, PivotRule::kFirstNonzero);
  const auto& piv = e.pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  for (Eigen::Index fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    ExactVector v = ExactVector::Constant(cols, Scalar::zero(f));
    v(fc) = Scalar::one(f);
    // back-substitute over the field on the echelon rows
    for (int r = static_cast<int>(piv.size()) - 1; r >= 0; --r) {
      Eigen::Index pc = piv[r];
      if (pc > fc) continue;
      Scalar acc = Scalar::zero(f);
      for (Eigen::Index j = pc + 1; j <= fc; ++j) {
        if (e.w(r, j).is_zero() || v(j).is_zero()) continue;
        acc += e.w(r, j) * v(j);
      }
      v(pc) = -acc / e.w(r, pc);
    }
    normalize_primitive(v);
    out.push_back(std::move(v));
  }
  return out;
}

Scalar determinant_of(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1L);
  // Gaussian elimination over the field, tracking the pivot product.
  ExactMatrix w = m;
  Scalar det(1L);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!w(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) return Scalar(0L);
    if (pr != c) {
      w.row(pr).swap(w.row(c));
      det = -det;
    }
    det *= w(c, c);
    Scalar inv = w(c, c).inverse();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (w(i, c).is_zero()) continue;
      Scalar f = w(i, c) * inv;
      for (Eigen::Index j = c + 1; j < n; ++j) w(i, j) -= f * w(c, j);
      w(i, c) = Scalar(0L);
    }
  }
  return det;
}

ExactMatrix inverse_of(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  const FieldSpec* f = field_of(m);
  ExactMatrix w = m;
  ExactMatrix inv = ExactMatrix::Constant(n, n, Scalar::zero(f));
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = Scalar::one(f);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!w(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) throw std::invalid_argument("matrix is singular");
    if (pr != c) {
      w.row(pr).swap(w.row(c));
      inv.row(pr).swap(inv.row(c));
    }
    Scalar piv_inv = w(c, c).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      w(c, j) *= piv_inv;
      inv(c, j) *= piv_inv;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || w(i, c).is_zero()) continue;
      Scalar factor = w(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        w(i, j) -= factor * w(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

ExactMatrix matrix_from_rows(const std::vector<std::vector<Scalar>>& rows, int cols) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][j];
  }
  return m;
}

ExactMatrix matrix_from_rows(const std::vector<ExactVector>& rows, int cols) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i](j);
  }
  return m;
}

int span_rank(const std::vector<ExactVector>& vectors, int dim) {
  if (vectors.empty()) return 0;
  return rank_of(matrix_from_rows(vectors, dim));
}

bool in_span(const std::vector<ExactVector>& basis, const ExactVector& v) {
  int dim = static_cast<int>(v.size());
  int base_rank = span_rank(basis, dim);
  std::vector<ExactVector> ext = basis;
  ext.push_back(v);
  return span_rank(ext, dim) == base_rank;
}

}  // namespace logder
