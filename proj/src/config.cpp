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

#include "logder/config.hpp"

#include <algorithm>
#include <sstream>

namespace logder {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail_line(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

// Projective normal form: divide by content, first nonzero entry positive.
std::vector<Scalar> projective_normal(const std::vector<Scalar>& p) {
  ExactVector v(static_cast<Eigen::Index>(p.size()));
  for (size_t i = 0; i < p.size(); ++i) v(static_cast<Eigen::Index>(i)) = p[i];
  normalize_primitive(v);
  std::vector<Scalar> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = v(static_cast<Eigen::Index>(i));
  return out;
}

std::string point_str(const std::vector<Scalar>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ":";
    s += p[i].str();
  }
  return s + ")";
}

}  // namespace

PointConfig parse_points(std::string_view text) {
  PointConfig cfg;
  bool have_field = false, have_dim = false;
  std::vector<std::vector<Scalar>> normals;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool any_label = false;
  while (std::getline(stream, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "field") {
      if (have_field) fail_line(lineno, "duplicate field directive");
      if (toks.size() == 2 && toks[1] == "rational") {
        cfg.field = FieldSpec::rationals();
      } else if (toks.size() == 3 && toks[1] == "cyclotomic") {
        unsigned m = 0;
        try {
          m = static_cast<unsigned>(std::stoul(toks[2]));
        } catch (...) {
          fail_line(lineno, "bad cyclotomic conductor '" + toks[2] + "'");
        }
        if (m == 0) fail_line(lineno, "conductor must be positive");
        cfg.field = FieldSpec::cyclotomic(m);
      } else {
        fail_line(lineno, "expected 'field rational' or 'field cyclotomic M'");
      }
      have_field = true;
    } else if (kw == "dim") {
      if (have_dim) fail_line(lineno, "duplicate dim directive");
      if (toks.size() != 2) fail_line(lineno, "expected 'dim N'");
      try {
        cfg.n = std::stoi(toks[1]);
      } catch (...) {
        fail_line(lineno, "bad dimension '" + toks[1] + "'");
      }
      if (cfg.n < 1) fail_line(lineno, "dimension must be at least 1");
      have_dim = true;
    } else if (kw == "point") {
      if (!have_field || !have_dim)
        fail_line(lineno, "field and dim must precede the first point");
      size_t want = static_cast<size_t>(cfg.n) + 1;
      if (toks.size() != want + 1 && toks.size() != want + 2)
        fail_line(lineno, "expected " + std::to_string(want) +
                              " coordinates (and an optional label)");
      std::vector<Scalar> p;
      p.reserve(want);
      for (size_t i = 1; i <= want; ++i) {
        try {
          p.push_back(Scalar::parse(toks[i], cfg.field));
        } catch (const ParseError& e) {
          fail_line(lineno, "coordinate '" + toks[i] + "': " + e.what());
        } catch (const FieldMismatchError& e) {
          fail_line(lineno, "coordinate '" + toks[i] + "': " + e.what());
        }
      }
      bool all_zero = true;
      for (const auto& c : p)
        if (!c.is_zero()) { all_zero = false; break; }
      if (all_zero) fail_line(lineno, "zero vector is not a projective point");
      auto normal = projective_normal(p);
      for (size_t i = 0; i < normals.size(); ++i) {
        if (normals[i] == normal)
          fail_line(lineno, "duplicate projective point " + point_str(p) +
                                " (same as point " + std::to_string(i + 1) + ")");
      }
      normals.push_back(std::move(normal));
      cfg.points.push_back(std::move(p));
      if (toks.size() == want + 2) {
        cfg.labels.resize(cfg.points.size());
        cfg.labels.back() = toks[want + 1];
        any_label = true;
      } else if (any_label) {
        cfg.labels.resize(cfg.points.size());
      }
    } else {
      fail_line(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (cfg.points.empty()) throw ParseError("no points in input");
  return cfg;
}

MultiPoly dual_form(const std::vector<Scalar>& point) {
  const int nv = static_cast<int>(point.size());
  MultiPoly out(nv);
  for (int i = 0; i < nv; ++i)
    out.add_term(MultiIndex::unit(nv, i), point[i]);
  return out;
}

ArrangementData arrangement_data(const PointConfig& config) {
  const int nv = config.n + 1;
  MultiPoly f = MultiPoly::constant(nv, Scalar(1L));
  for (const auto& p : config.points) f = f * dual_form(p);
  ArrangementData out{std::move(f), {}};
  out.jacobian.reserve(nv);
  for (int j = 0; j < nv; ++j) out.jacobian.push_back(out.f.derive1(j));
  return out;
}

namespace {

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar acc(0L);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Canonical representative of (s : t).
std::pair<Scalar, Scalar> canonical_param(Scalar s, Scalar t) {
  ExactVector v(2);
  v(0) = std::move(s);
  v(1) = std::move(t);
  normalize_primitive(v);
  return {v(0), v(1)};
}

void certify_into(const PointConfig& config, LineChart& line) {
  const int nv = config.n + 1;
  // A, B independent
  bool independent = false;
  for (int i = 0; i < nv && !independent; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (!(line.A[i] * line.B[j] - line.A[j] * line.B[i]).is_zero()) {
        independent = true;
        break;
      }
  if (!independent) throw GenericityError("A and B are proportional");
  line.intersection_params.clear();
  line.intersection_params.reserve(config.points.size());
  for (size_t i = 0; i < config.points.size(); ++i) {
    Scalar pa = dot(config.points[i], line.A);
    Scalar pb = dot(config.points[i], line.B);
    if (pa.is_zero() && pb.is_zero())
      throw GenericityError("line lies inside dual hyperplane of point " +
                            std::to_string(i + 1));
    line.intersection_params.push_back(canonical_param(pb, -pa));
  }
  for (size_t i = 0; i < line.intersection_params.size(); ++i) {
    const auto& [si, ti] = line.intersection_params[i];
    for (size_t j = i + 1; j < line.intersection_params.size(); ++j) {
      const auto& [sj, tj] = line.intersection_params[j];
      if ((si * tj - sj * ti).is_zero())
        throw GenericityError("intersection parameters of points " +
                              std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " coincide");
    }
  }
  line.certified = true;
}

}  // namespace

LineChart sample_line(const PointConfig& config, std::uint64_t seed,
                      long coeff_bound, int max_attempts) {
  if (coeff_bound < 1) throw std::invalid_argument("coeff_bound must be >= 1");
  SplitMix64 rng(seed);
  const int nv = config.n + 1;
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    LineChart line;
    line.seed = seed;
    line.A.reserve(nv);
    line.B.reserve(nv);
    for (int i = 0; i < nv; ++i) line.A.emplace_back(rng.draw(-coeff_bound, coeff_bound));
    for (int i = 0; i < nv; ++i) line.B.emplace_back(rng.draw(-coeff_bound, coeff_bound));
    try {
      certify_into(config, line);
      return line;
    } catch (const GenericityError& e) {
      last_error = e.what();
    }
  }
  throw GenericityError("no generic line found in " + std::to_string(max_attempts) +
                        " attempts (last failure: " + last_error +
                        "); try a larger --coeff-bound");
}

LineChart certify_line(const PointConfig& config, std::vector<Scalar> A,
                       std::vector<Scalar> B) {
  LineChart line;
  line.A = std::move(A);
  line.B = std::move(B);
  certify_into(config, line);
  return line;
}

LineFrame line_frame(const LineChart& line, int n, bool alternate) {
  const int nv = n + 1;
  std::vector<std::vector<Scalar>> rows;
  rows.push_back(line.A);
  rows.push_back(line.B);
  // complete with unit rows, scanning up or down
  std::vector<int> order(nv);
  for (int i = 0; i < nv; ++i) order[i] = alternate ? nv - 1 - i : i;
  for (int idx : order) {
    if (static_cast<int>(rows.size()) == nv) break;
    std::vector<Scalar> unit(nv, Scalar(0L));
    unit[idx] = Scalar(1L);
    rows.push_back(unit);
    if (rank_of(matrix_from_rows(rows, nv)) != static_cast<int>(rows.size()))
      rows.pop_back();
  }
  if (static_cast<int>(rows.size()) != nv)
    throw GenericityError("could not complete A, B to a basis");
  LineFrame frame;
  frame.fwd = matrix_from_rows(rows, nv);
  frame.inv = inverse_of(frame.fwd);
  return frame;
}

}  // namespace logder
