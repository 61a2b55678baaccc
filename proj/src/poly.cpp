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

#include "logder/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace logder {

MultiIndex::MultiIndex(std::vector<int> e) : e_(std::move(e)) {
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("negative exponent");
}

MultiIndex MultiIndex::zero(int nvars) {
  return MultiIndex(std::vector<int>(nvars, 0));
}

MultiIndex MultiIndex::unit(int nvars, int slot) {
  std::vector<int> e(nvars, 0);
  e.at(slot) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const {
  int d = 0;
  for (int x : e_) d += x;
  return d;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
  std::vector<int> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plus_unit(int slot) const {
  std::vector<int> e(e_);
  e.at(slot) += 1;
  return MultiIndex(std::move(e));
}

bool MultiIndex::canonical_before(const MultiIndex& a, const MultiIndex& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e_ > b.e_;  // lex-descending within a degree
}

std::vector<MultiIndex> monomials_of_degree(int nvars, int degree) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(nvars, 0);
  // lexicographically descending: leading exponent from degree down to 0
  auto rec = [&](auto&& self, int slot, int rem) -> void {
    if (slot == nvars - 1) {
      cur[slot] = rem;
      out.push_back(MultiIndex(cur));
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[slot] = e;
      self(self, slot + 1, rem - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, Scalar(0L));
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(std::vector<Scalar>(degree + 1, Scalar(0L)));
}

BinaryForm BinaryForm::linear(const Scalar& cs, const Scalar& ct) {
  return BinaryForm({cs, ct});
}

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Scalar BinaryForm::evaluate(const Scalar& s, const Scalar& t) const {
  const int D = degree();
  std::vector<Scalar> sp(D + 1, Scalar(1L)), tp(D + 1, Scalar(1L));
  for (int i = 1; i <= D; ++i) {
    sp[i] = sp[i - 1] * s;
    tp[i] = tp[i - 1] * t;
  }
  Scalar acc(0L);
  for (int u = 0; u <= D; ++u) {
    if (c_[u].is_zero()) continue;
    acc += c_[u] * sp[D - u] * tp[u];
  }
  return acc;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (degree() != o.degree())
    throw std::invalid_argument("binary form degree mismatch in +");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out = BinaryForm::zero(a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

BinaryForm operator*(const Scalar& c, BinaryForm f) {
  for (auto& x : f.c_) x *= c;
  return f;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

BinaryForm BinaryForm::shifted(int a, int b) const {
  BinaryForm out = BinaryForm::zero(degree() + a + b);
  // multiplying by s^a t^b sends index u to u + b
  for (int u = 0; u <= degree(); ++u) out.c_[u + b] = c_[u];
  return out;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  const int D = degree();
  for (int u = 0; u <= D; ++u) {
    if (c_[u].is_zero()) continue;
    std::string cs = c_[u].str();
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << "-";
        cs = cs.substr(1);
      } else {
        os << "+";
      }
    }
    first = false;
    int es = D - u, et = u;
    bool has_var = es > 0 || et > 0;
    if (cs != "1" || !has_var) {
      bool needs_parens = cs.find('+') != std::string::npos ||
                          cs.find('-', 1) != std::string::npos;
      if (needs_parens && has_var) os << "(" << cs << ")";
      else os << cs;
      if (has_var) os << "*";
    }
    if (es > 0) {
      os << "s";
      if (es > 1) os << "^" << es;
      if (et > 0) os << "*";
    }
    if (et > 0) {
      os << "t";
      if (et > 1) os << "^" << et;
    }
  }
  if (first) return "0";
  return os.str();
}

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(MultiIndex::zero(nvars), c);
  return p;
}

MultiPoly MultiPoly::monomial(MultiIndex mi, const Scalar& c) {
  MultiPoly p(mi.vars());
  p.add_term(mi, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int slot) {
  return monomial(MultiIndex::unit(nvars, slot), Scalar(1L));
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [mi, c] : terms_) d = std::max(d, mi.degree());
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [mi, c] : terms_) {
    if (!d) d = mi.degree();
    else if (*d != mi.degree()) return std::nullopt;
  }
  return d;  // nullopt for the zero polynomial too
}

Scalar MultiPoly::coeff(const MultiIndex& mi) const {
  auto it = terms_.find(mi);
  return it == terms_.end() ? Scalar(0L) : it->second;
}

void MultiPoly::add_term(const MultiIndex& mi, const Scalar& c) {
  if (mi.vars() != nvars_) throw std::invalid_argument("multi-index arity mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mi, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [mi, c] : terms_) out.terms_.emplace(mi, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [mi, c] : o.terms_) add_term(mi, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [mi, c] : o.terms_) add_term(mi, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.plus(mb), ca * cb);
  return out;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& p) {
  MultiPoly out(p.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [mi, x] : p.terms_) out.add_term(mi, c * x);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [mi, c] : a.terms_) {
    if (!(mi == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly acc = MultiPoly::constant(nvars_, Scalar(1L));
  MultiPoly base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong length");
  // shared power cache per variable
  std::vector<std::vector<Scalar>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) pw[i].push_back(Scalar(1L));
  Scalar acc(0L);
  for (const auto& [mi, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = mi[i];
      while (static_cast<int>(pw[i].size()) <= e)
        pw[i].push_back(pw[i].back() * point[i]);
      if (e > 0) term *= pw[i][e];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::derive1(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [mi, c] : terms_) {
    int e = mi[var];
    if (e == 0) continue;
    std::vector<int> ex = mi.exponents();
    ex[var] -= 1;
    out.add_term(MultiIndex(std::move(ex)), Scalar(static_cast<long>(e)) * c);
  }
  return out;
}

MultiPoly MultiPoly::derive(const MultiIndex& alpha) const {
  if (alpha.vars() != nvars_) throw std::invalid_argument("derivative arity mismatch");
  MultiPoly out = *this;
  for (int v = 0; v < nvars_; ++v)
    for (int i = 0; i < alpha[v]; ++i) out = out.derive1(v);
  return out;
}

BinaryForm MultiPoly::restrict_line(std::span<const Scalar> A,
                                    std::span<const Scalar> B) const {
  auto d = homogeneous_degree();
  if (!d && !is_zero())
    throw std::invalid_argument("restrict_line requires a homogeneous polynomial");
  if (static_cast<int>(A.size()) != nvars_ || static_cast<int>(B.size()) != nvars_)
    throw std::invalid_argument("line point has wrong length");
  bool independent = false;
  for (int i = 0; i < nvars_ && !independent; ++i)
    for (int j = i + 1; j < nvars_; ++j)
      if (!(A[i] * B[j] - A[j] * B[i]).is_zero()) { independent = true; break; }
  if (!independent)
    throw std::invalid_argument("restrict_line requires independent A, B");
  if (is_zero()) return BinaryForm::zero(0);
  // per-variable powers of (A_i s + B_i t), grown on demand
  std::vector<std::vector<BinaryForm>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i)
    pw[i].push_back(BinaryForm({Scalar(1L)}));
  BinaryForm out = BinaryForm::zero(*d);
  for (const auto& [mi, c] : terms_) {
    BinaryForm term({c});
    for (int i = 0; i < nvars_; ++i) {
      int e = mi[i];
      while (static_cast<int>(pw[i].size()) <= e)
        pw[i].push_back(pw[i].back() * BinaryForm::linear(A[i], B[i]));
      if (e > 0) term = term * pw[i][e];
    }
    out += term;  // degree is *d for every term by homogeneity
  }
  return out;
}

MultiPoly MultiPoly::substitute_linear(
    const std::vector<std::vector<Scalar>>& rows) const {
  std::vector<MultiPoly> vals;
  vals.reserve(rows.size());
  for (const auto& row : rows) {
    MultiPoly v(nvars_);
    for (int j = 0; j < nvars_; ++j)
      v.add_term(MultiIndex::unit(nvars_, j), row.at(j));
    vals.push_back(std::move(v));
  }
  return substitute_polys(vals);
}

MultiPoly MultiPoly::substitute_polys(const std::vector<MultiPoly>& vals) const {
  if (static_cast<int>(vals.size()) != nvars_)
    throw std::invalid_argument("substitution needs one value per variable");
  std::vector<std::vector<MultiPoly>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i)
    pw[i].push_back(MultiPoly::constant(nvars_, Scalar(1L)));
  MultiPoly out(nvars_);
  for (const auto& [mi, c] : terms_) {
    MultiPoly term = MultiPoly::constant(nvars_, c);
    for (int i = 0; i < nvars_; ++i) {
      int e = mi[i];
      while (static_cast<int>(pw[i].size()) <= e)
        pw[i].push_back(pw[i].back() * vals[i]);
      if (e > 0) term = term * pw[i][e];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& [mi, c] : terms_)
    den_lcm = den_lcm / gcd(den_lcm, c.denominator()) * c.denominator();
  mpz_class content = 0;
  for (const auto& [mi, c] : terms_) {
    mpz_class scale = den_lcm / c.denominator();
    for (const auto& x : c.numerators()) content = gcd(content, abs(x * scale));
  }
  if (content == 0) content = 1;
  int lead_sign = terms_.begin()->second.sign_key();
  Scalar factor = Scalar::rational(lead_sign < 0 ? -den_lcm : den_lcm, content);
  return factor * (*this);
}

std::string MultiPoly::str(std::string_view var_prefix) const {
  if (terms_.empty()) return "0";
  // highest degree first, lex-descending within a degree
  std::vector<const std::pair<const MultiIndex, Scalar>*> items;
  for (const auto& kv : terms_) items.push_back(&kv);
  std::stable_sort(items.begin(), items.end(), [](auto* a, auto* b) {
    int da = a->first.degree(), db = b->first.degree();
    if (da != db) return da > db;
    return a->first.exponents() > b->first.exponents();
  });
  std::ostringstream os;
  bool first = true;
  for (auto* kv : items) {
    const MultiIndex& mi = kv->first;
    std::string cs = kv->second.str();
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << "-";
        cs = cs.substr(1);
      } else {
        os << "+";
      }
    }
    first = false;
    bool has_var = mi.degree() > 0;
    if (cs != "1" || !has_var) {
      bool needs_parens = has_var && (cs.find('+') != std::string::npos ||
                                      cs.find('-', 1) != std::string::npos);
      if (needs_parens) os << "(" << cs << ")";
      else os << cs;
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < mi.vars(); ++i) {
      if (mi[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_prefix << i;
      if (mi[i] > 1) os << "^" << mi[i];
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;
  int nvars;
  std::string_view prefix;
  const FieldSpec* field;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos) +
                     ": " + what);
  }

  MultiPoly parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true; else eat('+');
    MultiPoly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }
  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) acc = acc * parse_factor();
      else if (eat('/')) {
        // divisor must be a scalar factor
        MultiPoly d = parse_factor();
        if (d.total_degree() > 0) fail("cannot divide by a non-constant");
        Scalar c = d.coeff(MultiIndex::zero(nvars));
        if (c.is_zero()) fail("division by zero");
        acc = c.inverse() * acc;
      } else break;
    }
    return acc;
  }
  MultiPoly parse_factor() {
    MultiPoly base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      return base.pow(std::stoul(std::string(s.substr(start, pos - start))));
    }
    return base;
  }
  MultiPoly parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MultiPoly v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    if (s.substr(pos, prefix.size()) == prefix) {
      size_t vp = pos + prefix.size();
      size_t start = vp;
      while (vp < s.size() && std::isdigit(static_cast<unsigned char>(s[vp]))) ++vp;
      if (vp > start) {
        int idx = std::stoi(std::string(s.substr(start, vp - start)));
        if (idx >= nvars) fail("variable index out of range");
        pos = vp;
        return MultiPoly::variable(nvars, idx);
      }
    }
    if (c == 'e') {
      ++pos;
      return MultiPoly::constant(nvars, Scalar::root_of_unity(field));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return MultiPoly::constant(
          nvars, Scalar(mpz_class(std::string(s.substr(start, pos - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, int nvars,
                           std::string_view var_prefix, const FieldSpec* field) {
  PolyParser p{text, 0, nvars, var_prefix, field};
  MultiPoly v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace logder
