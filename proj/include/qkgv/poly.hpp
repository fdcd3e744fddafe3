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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qkgv/rat.hpp"

namespace qkgv {

/// Dense univariate polynomial over Q in the variable q.
///
/// Stored as an integer coefficient vector over a single positive common
/// denominator, kept in lowest terms, with no trailing zero coefficients.
/// Two polynomials are equal iff their representations are identical.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly monomial(const Rat& c, int degree);
  static Poly variable() { return monomial(Rat(1), 1); }
  /// Coefficients listed from degree 0 upward.
  static Poly from_coeffs(const std::vector<Rat>& coeffs);
  static Poly from_int_coeffs(std::vector<Int> coeffs, Int den = 1);

  int degree() const { return static_cast<int>(num_.size()) - 1; }
  bool is_zero() const { return num_.empty(); }
  bool is_constant() const { return num_.size() <= 1; }
  /// Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;

  Rat coeff(int i) const;
  Rat leading() const { return is_zero() ? Rat(0) : coeff(degree()); }
  std::vector<Rat> coeffs() const;
  const std::vector<Int>& int_coeffs() const { return num_; }
  const Int& denominator() const { return den_; }

  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);
  Poly& operator*=(const Rat& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

  Rat eval(const Rat& x) const;
  /// p(q^k), k >= 1.
  Poly substitute_power(int k) const;
  /// q^k * p for k >= 0; for k < 0 the low coefficients must vanish.
  Poly shifted(int k) const;
  /// p mod q^n.
  Poly truncated(int n) const;
  Poly monic() const;
  Poly derivative() const;
  /// Integer polynomial with coprime coefficients and positive leading coefficient.
  Poly primitive_part() const;

  std::string to_string(char var = 'q') const;

 private:
  void canonicalize();

  std::vector<Int> num_;
  Int den_{1};
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Euclidean division over Q: a = quot * b + rem, deg rem < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b when b divides a; throws PreconditionError otherwise.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, int e);

/// a^{-1} mod q^n; requires a(0) != 0.
Poly series_inverse(const Poly& a, int n);

struct Xgcd {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b = g
  Poly t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

}  // namespace qkgv
