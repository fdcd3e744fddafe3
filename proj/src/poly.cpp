/*
   Copyright 2026 The qkgv Authors

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

#include "qkgv/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qkgv/errors.hpp"

namespace qkgv {
namespace {

void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& c : v) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Long division of integer vectors with lazy scaling by the divisor's
// leading coefficient. On return: scale * a == quot * b + rem.
struct IntDivision {
  std::vector<Int> quot;
  std::vector<Int> rem;
  Int scale{1};
};

IntDivision int_divide(const std::vector<Int>& a, const std::vector<Int>& b, bool want_quot) {
  IntDivision out;
  out.rem = a;
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return out;
  if (want_quot) out.quot.assign(da - db + 1, Int(0));
  const Int& lead = b.back();
  const bool unit_lead = (lead == 1 || lead == -1);
  Int f, g;
  for (int i = da; i >= db; --i) {
    if (out.rem[i] == 0) continue;
    if (!unit_lead && !mpz_divisible_p(out.rem[i].get_mpz_t(), lead.get_mpz_t())) {
      mpz_gcd(g.get_mpz_t(), out.rem[i].get_mpz_t(), lead.get_mpz_t());
      Int mult = lead / g;
      if (mult < 0) mult = -mult;
      for (int j = 0; j <= i; ++j) out.rem[j] *= mult;
      for (auto& c : out.quot) c *= mult;
      out.scale *= mult;
    }
    mpz_divexact(f.get_mpz_t(), out.rem[i].get_mpz_t(), lead.get_mpz_t());
    if (want_quot) out.quot[i - db] = f;
    const int off = i - db;
    for (int j = 0; j <= db; ++j) {
      if (b[j] != 0) mpz_submul(out.rem[off + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  out.rem.resize(db > 0 ? db : 0);
  trim(out.rem);
  trim(out.quot);
  return out;
}

std::vector<Int> primitive(std::vector<Int> v) {
  trim(v);
  if (v.empty()) return v;
  Int g = content(v);
  if (v.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

}  // namespace

Poly::Poly(const Rat& c) {
  if (c != 0) {
    num_.push_back(c.get_num());
    den_ = c.get_den();
  }
}

Poly Poly::monomial(const Rat& c, int degree) {
  if (degree < 0) throw PreconditionError("Poly::monomial: negative degree");
  Poly p;
  if (c == 0) return p;
  p.num_.assign(degree + 1, Int(0));
  p.num_[degree] = c.get_num();
  p.den_ = c.get_den();
  return p;
}

Poly Poly::from_coeffs(const std::vector<Rat>& coeffs) {
  Int l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(c.get_num() * (l / c.get_den()));
  return from_int_coeffs(std::move(v), l);
}

Poly Poly::from_int_coeffs(std::vector<Int> coeffs, Int den) {
  if (den == 0) throw DivisionByZero("Poly::from_int_coeffs: zero denominator");
  Poly p;
  p.num_ = std::move(coeffs);
  p.den_ = std::move(den);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  trim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Int g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

int Poly::valuation() const {
  for (int i = 0; i < static_cast<int>(num_.size()); ++i)
    if (num_[i] != 0) return i;
  return 0;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(num_.size())) return Rat(0);
  Rat r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<Rat> Poly::coeffs() const {
  std::vector<Rat> out;
  out.reserve(num_.size());
  for (int i = 0; i <= degree(); ++i) out.push_back(coeff(i));
  return out;
}

Poly& Poly::operator+=(const Poly& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    if (num_.size() < b.num_.size()) num_.resize(b.num_.size());
    for (size_t i = 0; i < b.num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    Int l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), b.den_.get_mpz_t());
    const Int fa = l / den_;
    const Int fb = l / b.den_;
    if (num_.size() < b.num_.size()) num_.resize(b.num_.size());
    if (fa != 1)
      for (auto& c : num_) c *= fa;
    for (size_t i = 0; i < b.num_.size(); ++i)
      mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), fb.get_mpz_t());
    den_ = l;
  }
  canonicalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) { return *this += -b; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.num_) c = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Int> out(a.num_.size() + b.num_.size() - 1, Int(0));
  for (size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    const mpz_srcptr ai = a.num_[i].get_mpz_t();
    for (size_t j = 0; j < b.num_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), ai, b.num_[j].get_mpz_t());
  }
  return Poly::from_int_coeffs(std::move(out), a.den_ * b.den_);
}

Poly& Poly::operator*=(const Poly& b) { return *this = *this * b; }

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  canonicalize();
  return *this;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) {
    acc *= x;
    acc += Rat(num_[i]);
  }
  acc /= Rat(den_);
  return acc;
}

Poly Poly::substitute_power(int k) const {
  if (k < 1) throw PreconditionError("Poly::substitute_power: k must be positive");
  if (k == 1 || is_zero()) return *this;
  Poly p;
  p.num_.assign(static_cast<size_t>(degree()) * k + 1, Int(0));
  for (int i = 0; i <= degree(); ++i) p.num_[static_cast<size_t>(i) * k] = num_[i];
  p.den_ = den_;
  return p;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly p = *this;
  if (k > 0) {
    p.num_.insert(p.num_.begin(), k, Int(0));
  } else {
    if (valuation() < -k) throw PreconditionError("Poly::shifted: not divisible by q^k");
    p.num_.erase(p.num_.begin(), p.num_.begin() + (-k));
  }
  return p;
}

Poly Poly::truncated(int n) const {
  if (n >= static_cast<int>(num_.size())) return *this;
  Poly p;
  if (n <= 0) return p;
  p.num_.assign(num_.begin(), num_.begin() + n);
  p.den_ = den_;
  p.canonicalize();
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) throw DivisionByZero("Poly::monic of zero");
  Poly p = *this;
  const Int lead = num_.back();
  p.den_ = lead;
  p.canonicalize();
  return p;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Int> v(num_.size() - 1);
  for (size_t i = 1; i < num_.size(); ++i) v[i - 1] = num_[i] * static_cast<long>(i);
  return from_int_coeffs(std::move(v), den_);
}

Poly Poly::primitive_part() const {
  Poly p;
  p.num_ = primitive(num_);
  return p;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    const bool unit = (a == 1);
    if (!unit || i == 0) os << qkgv::to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("divmod by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  IntDivision d = int_divide(a.int_coeffs(), b.int_coeffs(), true);
  // a = A/da, b = B/db, scale*A = quot*B + rem
  // => a = quot*db/(scale*da) * b + rem/(scale*da)
  Poly q = Poly::from_int_coeffs(std::move(d.quot), d.scale * a.denominator());
  q *= Rat(b.denominator());
  Poly r = Poly::from_int_coeffs(std::move(d.rem), d.scale * a.denominator());
  return {std::move(q), std::move(r)};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("exact_div: divisor does not divide dividend");
  return q;
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.degree() < b.degree()) return a.is_zero();
  return int_divide(a.int_coeffs(), b.int_coeffs(), false).rem.empty();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
  std::vector<Int> x = primitive(a.int_coeffs());
  std::vector<Int> y = primitive(b.int_coeffs());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly(Rat(1));
    std::vector<Int> r = primitive(int_divide(x, y, false).rem);
    x = std::move(y);
    y = std::move(r);
  }
  return Poly::from_int_coeffs(std::move(x)).monic();
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw PreconditionError("pow: negative exponent");
  Poly out(Rat(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return out;
}

Poly series_inverse(const Poly& a, int n) {
  const Rat a0 = a.coeff(0);
  if (a0 == 0) throw DivisionByZero("series_inverse: constant term is zero");
  if (n <= 0) return Poly();
  std::vector<Rat> ac = a.coeffs();
  std::vector<Rat> inv(n);
  const Rat a0inv = Rat(1) / a0;
  inv[0] = a0inv;
  for (int k = 1; k < n; ++k) {
    Rat s(0);
    for (int j = 1; j <= k && j < static_cast<int>(ac.size()); ++j) s += ac[j] * inv[k - j];
    inv[k] = -s * a0inv;
  }
  return Poly::from_coeffs(inv);
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  Poly r0 = a, r1 = b;
  Poly s0(Rat(1)), s1, t0, t1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const Rat inv = Rat(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace qkgv
