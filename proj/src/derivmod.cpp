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

#include "logder/derivmod.hpp"

#include <algorithm>
#include <sstream>

namespace logder {

int DerivationElement::coefficient_degree() const {
  return coeffs.empty() ? -1 : coeffs.front().degree();
}

SplittingType::SplittingType(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("empty splitting type");
  std::sort(exps_.begin(), exps_.end());
  int base = exps_[0];
  for (int e : exps_) {
    int gap = e - base;
    if (gaps_.empty() || gaps_.back() != gap) {
      gaps_.push_back(gap);
      mults_.push_back(1);
    } else {
      ++mults_.back();
    }
  }
}

long long SplittingType::section_count(int d) const {
  long long acc = 0;
  for (int e : exps_) acc += std::max(0, d - e + 1);
  return acc;
}

std::string SplittingType::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < gaps_.size(); ++i) {
    if (i) os << " ";
    os << a() + gaps_[i];
    if (mults_[i] > 1) os << "^" << mults_[i];
  }
  return os.str();
}

std::vector<MultiIndex> derivation_indices(int n, int k) {
  return monomials_of_degree(n + 1, k);
}

namespace {

void require_certified(const LineChart& line) {
  if (!line.certified)
    throw GenericityError("operation requires a certified line");
}

std::vector<Scalar> power_products(const std::vector<Scalar>& point,
                                   const std::vector<MultiIndex>& betas) {
  std::vector<Scalar> out;
  out.reserve(betas.size());
  std::vector<std::vector<Scalar>> pw(point.size());
  for (size_t i = 0; i < point.size(); ++i) pw[i].push_back(Scalar(1L));
  for (const auto& beta : betas) {
    Scalar acc(1L);
    for (size_t m = 0; m < point.size(); ++m) {
      int e = beta[static_cast<int>(m)];
      while (static_cast<int>(pw[m].size()) <= e)
        pw[m].push_back(pw[m].back() * point[m]);
      if (e > 0) acc *= pw[m][e];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

ExactMatrix dk_condition_matrix(const PointConfig& config, const LineChart& line,
                                int k, int d) {
  require_certified(line);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  const auto betas = derivation_indices(config.n, k);
  const int C = static_cast<int>(betas.size());
  const int cols = (d + 1) * C;
  ExactMatrix m = ExactMatrix::Constant(config.r(), cols, Scalar(0L));
  for (int i = 0; i < config.r(); ++i) {
    const auto& [s, t] = line.intersection_params[i];
    std::vector<Scalar> sp(d + 1, Scalar(1L)), tp(d + 1, Scalar(1L));
    for (int u = 1; u <= d; ++u) {
      sp[u] = sp[u - 1] * s;
      tp[u] = tp[u - 1] * t;
    }
    const auto pb = power_products(config.points[i], betas);
    for (int j = 0; j < C; ++j) {
      if (pb[j].is_zero()) continue;
      for (int u = 0; u <= d; ++u) m(i, j * (d + 1) + u) = sp[d - u] * tp[u] * pb[j];
    }
  }
  return m;
}

std::vector<DerivationElement> dk_basis(const PointConfig& config,
                                        const LineChart& line, int k, int d) {
  const auto kernel = kernel_basis(dk_condition_matrix(config, line, k, d));
  const auto betas = derivation_indices(config.n, k);
  const int C = static_cast<int>(betas.size());
  std::vector<DerivationElement> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    DerivationElement e;
    e.k = k;
    e.coeffs.reserve(C);
    for (int j = 0; j < C; ++j) {
      std::vector<Scalar> c(d + 1);
      for (int u = 0; u <= d; ++u) c[u] = v(j * (d + 1) + u);
      e.coeffs.emplace_back(std::move(c));
    }
    out.push_back(std::move(e));
  }
  return out;
}

int dk_dim(const PointConfig& config, const LineChart& line, int k, int d) {
  ExactMatrix m = dk_condition_matrix(config, line, k, d);
  return static_cast<int>(m.cols()) - rank_of(m);
}

std::vector<EulerGenerator> euler_generators(const PointConfig& config,
                                             const LineChart& line, int k) {
  require_certified(line);
  const int n = config.n;
  const auto betas = derivation_indices(n, k);
  const int C = static_cast<int>(betas.size());
  std::map<MultiIndex, int, MultiIndexCanonicalLess> index_of;
  for (int j = 0; j < C; ++j) index_of.emplace(betas[j], j);
  std::vector<EulerGenerator> out;
  for (const auto& gamma : monomials_of_degree(n + 1, k - 1)) {
    EulerGenerator g;
    g.gamma = gamma;
    g.element.k = k;
    g.element.coeffs.assign(C, BinaryForm::zero(1));
    for (int m = 0; m <= n; ++m) {
      int slot = index_of.at(gamma.plus_unit(m));
      g.element.coeffs[slot] += BinaryForm::linear(line.A[m], line.B[m]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<ExactVector> euler_span_vectors(const PointConfig& config,
                                            const LineChart& line, int k, int d) {
  require_certified(line);
  const int n = config.n;
  const auto betas = derivation_indices(n, k);
  const int C = static_cast<int>(betas.size());
  std::map<MultiIndex, int, MultiIndexCanonicalLess> index_of;
  for (int j = 0; j < C; ++j) index_of.emplace(betas[j], j);
  std::vector<ExactVector> out;
  if (d < 1) return out;
  for (const auto& gamma : monomials_of_degree(n + 1, k - 1)) {
    for (int u = 0; u < d; ++u) {  // multiplier s^(d-1-u) t^u
      ExactVector v = ExactVector::Constant((d + 1) * C, Scalar(0L));
      for (int m = 0; m <= n; ++m) {
        int slot = index_of.at(gamma.plus_unit(m));
        v(slot * (d + 1) + u) += line.A[m];
        v(slot * (d + 1) + u + 1) += line.B[m];
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

int euler_dim(const PointConfig& config, const LineChart& line, int k, int d) {
  if (d < 1) return 0;
  const auto vecs = euler_span_vectors(config, line, k, d);
  const int C = static_cast<int>(derivation_indices(config.n, k).size());
  return span_rank(vecs, (d + 1) * C);
}

std::vector<int> fit_exponents(const std::vector<int>& h, bool* ok) {
  *ok = false;
  std::vector<int> exps;
  int prev_h = 0, prev_delta = 0;
  for (size_t d = 0; d < h.size(); ++d) {
    int delta = h[d] - prev_h;
    int t = delta - prev_delta;
    if (t < 0) return {};
    exps.insert(exps.end(), t, static_cast<int>(d));
    prev_h = h[d];
    prev_delta = delta;
  }
  for (size_t d = 0; d < h.size(); ++d) {
    long long chk = 0;
    for (int a : exps) chk += std::max<long long>(0, static_cast<long long>(d) - a + 1);
    if (chk != h[d]) return {};
  }
  *ok = true;
  return exps;
}

SplittingResult splitting_type(const PointConfig& config, const LineChart& line,
                               int k, int degree_cap) {
  require_certified(line);
  const int C = static_cast<int>(derivation_indices(config.n, k).size());
  const int gamma_count =
      static_cast<int>(monomials_of_degree(config.n + 1, k - 1).size());
  const int rank_target = C - gamma_count;  // rank of the reduced module
  const int hard_cap = degree_cap > 0 ? degree_cap : 2 * config.r() + 8;
  SplittingResult res;
  int prev = 0, prev_delta = -1, stable = 0;
  for (int d = 0; d <= hard_cap; ++d) {
    int dk = dk_dim(config, line, k, d);
    int eu = euler_dim(config, line, k, d);
    int h = dk - eu;
    if (h < 0)
      throw SplittingFitError("negative reduced dimension at degree " +
                              std::to_string(d));
    res.dk_dims.push_back(dk);
    res.h0.push_back(h);
    int delta = h - prev;
    stable = (delta == prev_delta && delta == rank_target) ? stable + 1 : 0;
    prev = h;
    prev_delta = delta;
    if (stable >= 1 && d >= 1) {
      bool ok = false;
      auto exps = fit_exponents(res.h0, &ok);
      if (ok && static_cast<int>(exps.size()) == rank_target) {
        res.type = SplittingType(std::move(exps));
        res.cap = d;
        return res;
      }
    }
  }
  throw SplittingFitError(
      "no consistent splitting fit up to degree " + std::to_string(hard_cap) +
      "; the line may be non-generic, or raise --degree-cap");
}

std::vector<MultiPoly> lift_to_coordinates(const DerivationElement& element,
                                           const LineChart& line, int n) {
  require_certified(line);
  const int nv = n + 1;
  LineFrame frame = line_frame(line, n);
  // u, v with u.A = 1, u.B = 0, v.A = 0, v.B = 1: columns 0, 1 of inv
  MultiPoly U(nv), V(nv);
  for (int m = 0; m < nv; ++m) {
    U.add_term(MultiIndex::unit(nv, m), frame.inv(m, 0));
    V.add_term(MultiIndex::unit(nv, m), frame.inv(m, 1));
  }
  const int d = element.coefficient_degree();
  std::vector<MultiPoly> up{MultiPoly::constant(nv, Scalar(1L))};
  std::vector<MultiPoly> vp{MultiPoly::constant(nv, Scalar(1L))};
  for (int i = 1; i <= d; ++i) {
    up.push_back(up.back() * U);
    vp.push_back(vp.back() * V);
  }
  std::vector<MultiPoly> out;
  out.reserve(element.coeffs.size());
  for (const auto& g : element.coeffs) {
    MultiPoly f(nv);
    for (int u = 0; u <= d; ++u) {
      if (g.coeff(u).is_zero()) continue;
      f += g.coeff(u) * (up[d - u] * vp[u]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

ExactMatrix subspace_basis(const LineChart& line, int n) {
  const int nv = n + 1;
  ExactMatrix ab(2, nv);
  for (int j = 0; j < nv; ++j) {
    ab(0, j) = line.A[j];
    ab(1, j) = line.B[j];
  }
  auto kernel = kernel_basis(ab);
  ExactMatrix alpha(static_cast<Eigen::Index>(kernel.size()), nv);
  for (size_t i = 0; i < kernel.size(); ++i)
    for (int j = 0; j < nv; ++j) alpha(static_cast<Eigen::Index>(i), j) = kernel[i](j);
  return alpha;
}

MultiPoly eta_transform(const std::vector<MultiPoly>& theta_coeffs, int k,
                        const ExactMatrix& alpha) {
  if (theta_coeffs.empty()) throw std::invalid_argument("empty derivation");
  const int nv = theta_coeffs.front().nvars();
  const int n = nv - 1;
  if (alpha.cols() != nv || alpha.rows() != n - 1)
    throw std::invalid_argument("alpha must be (n-1) x (n+1)");
  if (rank_of(alpha) != n - 1)
    throw std::invalid_argument("alpha must have rank n-1");
  const auto betas = derivation_indices(n, k);
  if (betas.size() != theta_coeffs.size())
    throw std::invalid_argument("coefficient count does not match k");
  // e_alpha(M_i) = sum_j sign(1, j) X_j det(rows {unit_i, alpha} minus col j)
  std::vector<MultiPoly> vals;
  vals.reserve(nv);
  for (int i = 0; i < nv; ++i) {
    MultiPoly mi(nv);
    for (int j = 0; j < nv; ++j) {
      ExactMatrix minor = ExactMatrix::Constant(n, n, Scalar(0L));
      // row 0: unit vector in slot i (column j removed)
      int cc = 0;
      for (int c = 0; c < nv; ++c) {
        if (c == j) continue;
        minor(0, cc) = Scalar(c == i ? 1L : 0L);
        ++cc;
      }
      for (int rr = 0; rr < n - 1; ++rr) {
        cc = 0;
        for (int c = 0; c < nv; ++c) {
          if (c == j) continue;
          minor(rr + 1, cc) = alpha(rr, c);
          ++cc;
        }
      }
      Scalar det = determinant_of(minor);
      if ((1 + j) % 2 == 1) det = -det;  // cofactor sign of the X row
      if (!det.is_zero()) mi.add_term(MultiIndex::unit(nv, j), det);
    }
    vals.push_back(std::move(mi));
  }
  MultiPoly F(nv);
  for (size_t b = 0; b < betas.size(); ++b) {
    if (theta_coeffs[b].is_zero()) continue;
    F += theta_coeffs[b].substitute_polys(vals) *
         MultiPoly::monomial(betas[b], Scalar(1L));
  }
  return F;
}

}  // namespace logder
