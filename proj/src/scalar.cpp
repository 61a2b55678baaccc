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

#include "logder/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace logder {

namespace {

// x^m - 1 divided by the product of Phi_d over proper divisors d of m.
// Exact division of integer polynomials with monic divisor.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    mpz_class c = num[i];  // den is monic
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

std::vector<mpz_class> cyclotomic_poly(unsigned m) {
  if (m == 1) return {-1, 1};
  // x^m - 1
  std::vector<mpz_class> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = poly_divide_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

// Reduce a polynomial (ascending coefficients) modulo the monic modulus.
void reduce_mod(std::vector<mpz_class>& v, const std::vector<mpz_class>& mod) {
  const int deg = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
    if (v[i] == 0) continue;
    mpz_class c = v[i];
    for (int j = 0; j <= deg; ++j) v[i - deg + j] -= c * mod[j];
  }
  v.resize(deg);
}

struct Rat {
  mpz_class n, d;  // d > 0
  Rat(mpz_class nn = 0, mpz_class dd = 1) : n(std::move(nn)), d(std::move(dd)) {
    normalize();
  }
  void normalize() {
    if (d < 0) { n = -n; d = -d; }
    mpz_class g = gcd(abs(n), d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  bool is_zero() const { return n == 0; }
  Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
  Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
  Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
  Rat operator/(const Rat& o) const { return Rat(n * o.d, d * o.n); }
};

using RatPoly = std::vector<Rat>;  // ascending, may carry zero leads

int rp_degree(const RatPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

RatPoly rp_sub_scaled(RatPoly a, const RatPoly& b, const Rat& c, int shift) {
  if (static_cast<int>(a.size()) < static_cast<int>(b.size()) + shift)
    a.resize(b.size() + shift);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - c * b[i];
  return a;
}

// (quotient, remainder) of a by b over Q.
std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
  int db = rp_degree(b);
  RatPoly q(std::max<int>(rp_degree(a) - db + 1, 1));
  while (true) {
    int da = rp_degree(a);
    if (da < db) break;
    Rat c = a[da] / b[db];
    q[da - db] = c;
    a = rp_sub_scaled(std::move(a), b, c, da - db);
  }
  return {q, a};
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

RatPoly rp_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

}  // namespace

FieldSpec::FieldSpec(unsigned m) : m_(m), modulus_(cyclotomic_poly(m)) {}

const FieldSpec* FieldSpec::rationals() { return cyclotomic(1); }

const FieldSpec* FieldSpec::cyclotomic(unsigned conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, const FieldSpec*> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(conductor);
  if (it != registry.end()) return it->second;
  const FieldSpec* f = new FieldSpec(conductor);
  registry.emplace(conductor, f);
  return f;
}

std::string FieldSpec::name() const {
  if (is_rational()) return "rational";
  return "cyclotomic " + std::to_string(m_);
}

Scalar::Scalar(const FieldSpec* f, std::vector<mpz_class> num, mpz_class den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Scalar::Scalar(long v)
    : field_(FieldSpec::rationals()), num_{mpz_class(v)}, den_(1) {}

Scalar::Scalar(const mpz_class& v)
    : field_(FieldSpec::rationals()), num_{v}, den_(1) {}

Scalar Scalar::rational(mpz_class num, mpz_class den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  return Scalar(FieldSpec::rationals(), {std::move(num)}, std::move(den));
}

Scalar Scalar::zero(const FieldSpec* f) {
  return Scalar(f, std::vector<mpz_class>(f->degree(), 0), 1);
}

Scalar Scalar::one(const FieldSpec* f) {
  std::vector<mpz_class> n(f->degree(), 0);
  n[0] = 1;
  return Scalar(f, std::move(n), 1);
}

Scalar Scalar::root_of_unity(const FieldSpec* f) {
  if (f->is_rational())
    throw FieldMismatchError("the rationals carry no primitive root symbol");
  std::vector<mpz_class> n(f->degree(), 0);
  if (f->degree() == 1)
    n[0] = -1;  // conductor 2: e = -1
  else
    n[1] = 1;
  return Scalar(f, std::move(n), 1);
}

Scalar Scalar::make(const FieldSpec* f, std::vector<mpz_class> num, mpz_class den) {
  if (den == 0) throw DivisionByZeroError("zero denominator");
  reduce_mod(num, f->modulus());
  num.resize(f->degree(), 0);
  return Scalar(f, std::move(num), std::move(den));
}

void Scalar::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    g = gcd(g, abs(c));
    if (g == 1) break;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
  bool zero = true;
  for (const auto& c : num_)
    if (c != 0) { zero = false; break; }
  if (zero) den_ = 1;
}

bool Scalar::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational_value() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

int Scalar::sign_key() const {
  for (const auto& c : num_)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

const FieldSpec* Scalar::common_field(const FieldSpec* a, const FieldSpec* b) {
  if (a == b) return a;
  if (a->is_rational()) return b;
  if (b->is_rational()) return a;
  throw FieldMismatchError("mixed fields: " + a->name() + " vs " + b->name());
}

Scalar Scalar::promoted(const FieldSpec* f) const {
  if (field_ == f) return *this;
  if (!field_->is_rational())
    throw FieldMismatchError("cannot promote " + field_->name() + " into " + f->name());
  std::vector<mpz_class> n(f->degree(), 0);
  n[0] = num_[0];
  return Scalar(f, std::move(n), den_);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const FieldSpec* f = common_field(field_, o.field());
  Scalar a = promoted(f), b = o.promoted(f);
  std::vector<mpz_class> n(f->degree());
  for (int i = 0; i < f->degree(); ++i)
    n[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  *this = Scalar(f, std::move(n), a.den_ * b.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  const FieldSpec* f = common_field(field_, o.field());
  Scalar a = promoted(f), b = o.promoted(f);
  const int d = f->degree();
  std::vector<mpz_class> n(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.num_[j] == 0) continue;
      n[i + j] += a.num_[i] * b.num_[j];
    }
  }
  reduce_mod(n, f->modulus());
  n.resize(d, 0);
  *this = Scalar(f, std::move(n), a.den_ * b.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("division by zero scalar");
  const int d = field_->degree();
  if (d == 1) return Scalar(field_, {den_}, num_[0]);
  // Extended Euclid over Q[x] against the (irreducible) modulus.
  RatPoly r0, r1, t0{Rat(0)}, t1{Rat(1)};
  for (const auto& c : field_->modulus()) r0.emplace_back(c);
  for (const auto& c : num_) r1.emplace_back(c);
  while (rp_degree(r1) > 0) {
    auto [q, rem] = rp_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RatPoly tn = rp_sub(t0, rp_mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  // r1 is a nonzero constant (modulus irreducible, value nonzero).
  Rat lead = r1[0];
  std::vector<mpz_class> n(d, 0);
  mpz_class den = 1;
  for (int i = 0; i <= rp_degree(t1); ++i) {
    Rat c = t1[i] / lead;
    den = den / gcd(den, c.d) * c.d;  // lcm
  }
  for (int i = 0; i <= rp_degree(t1); ++i) {
    Rat c = t1[i] / lead;
    n[i] = c.n * (den / c.d);
  }
  // inverse of (num/den0) is den0 * inv(num)
  return Scalar(field_, std::move(n), std::move(den)) * Scalar(den_);
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::substitute_root(unsigned j) const {
  const int d = field_->degree();
  if (d == 1) return *this;
  Scalar e = Scalar::root_of_unity(field_).pow(j);
  Scalar acc = Scalar::zero(field_);
  Scalar ep = Scalar::one(field_);
  for (int i = 0; i < d; ++i) {
    acc += Scalar(num_[i]) * ep;
    ep *= e;
  }
  return acc / Scalar(den_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  const FieldSpec* f = Scalar::common_field(a.field(), b.field());
  Scalar x = a.promoted(f), y = b.promoted(f);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

std::string Scalar::str() const {
  std::ostringstream os;
  int terms = 0;
  std::ostringstream body;
  for (size_t i = 0; i < num_.size(); ++i) {
    const mpz_class& c = num_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (terms == 0) {
      if (c < 0) body << "-";
    } else {
      body << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      body << a.get_str();
    } else {
      if (a != 1) body << a.get_str() << "*";
      body << "e";
      if (i > 1) body << "^" << i;
    }
    ++terms;
  }
  if (terms == 0) return "0";
  if (den_ == 1) return body.str();
  if (terms == 1)
    os << body.str() << "/" << den_.get_str();
  else
    os << "(" << body.str() << ")/" << den_.get_str();
  return os.str();
}

namespace {

struct ScalarParser {
  std::string_view s;
  size_t pos = 0;
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
    throw ParseError("scalar parse error at offset " + std::to_string(pos) + ": " + what);
  }

  Scalar parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true; else eat('+');
    Scalar acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }
  Scalar parse_term() {
    Scalar acc = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) acc *= parse_factor();
      else if (eat('/')) {
        Scalar d = parse_factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else break;
    }
    return acc;
  }
  Scalar parse_factor() {
    Scalar base = parse_atom();
    skip_ws();
    if (eat('^')) {
      unsigned long e = parse_uint();
      return base.pow(e);
    }
    return base;
  }
  unsigned long parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected exponent");
    return std::stoul(std::string(s.substr(start, pos - start)));
  }
  Scalar parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'e') {
      if (field->is_rational()) fail("symbol 'e' is not in the rational field");
      ++pos;
      return Scalar::root_of_unity(field);
    }
    if (c == '-') {  // unary minus inside a factor
      ++pos;
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Scalar(mpz_class(std::string(s.substr(start, pos - start))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const FieldSpec* field) {
  ScalarParser p{text, 0, field};
  Scalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  // Park the value in the requested field so callers get uniform carriers.
  return Scalar::zero(field) + v;
}

}  // namespace logder
