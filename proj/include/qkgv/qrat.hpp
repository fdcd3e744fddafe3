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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qkgv/cyclotomic.hpp"
#include "qkgv/kring.hpp"
#include "qkgv/poly.hpp"

namespace qkgv {

/// Rational function of q over Q in normal form: gcd(num, den) = 1 and den monic.
class QRat {
 public:
  QRat() : den_(Rat(1)) {}
  explicit QRat(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit QRat(long c) : QRat(Rat(c)) {}
  explicit QRat(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
  /// num / den, reduced. Throws DivisionByZero if den = 0.
  QRat(const Poly& num, const Poly& den);

  /// num / (sign * prod_r Phi_r^{mult[r]}), reduced by trial division only.
  /// Use when the denominator's cyclotomic factorization is known; no gcd is needed.
  static QRat over_cyclotomics(Poly num, const std::map<int, int>& mult, int sign = 1);
  /// c / (1 - q^k)^e
  static QRat inverse_one_minus_qk(int k, int e, const Rat& c = Rat(1));

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  QRat& operator+=(const QRat& b);
  QRat& operator-=(const QRat& b);
  QRat& operator*=(const QRat& b);
  QRat& operator*=(const Rat& c);
  QRat& operator/=(const QRat& b);
  QRat operator-() const;

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator*(QRat a, const Rat& c) { return a *= c; }
  friend QRat operator*(const Rat& c, QRat a) { return a *= c; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// f(q^k)
  QRat substitute_power(int k) const;
  /// Value at a rational point where the denominator does not vanish.
  Rat eval(const Rat& x) const;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

QRat inverse(const QRat& a);
inline bool is_zero(const QRat& a) { return a.is_zero(); }

/// num / prod_r Phi_r^{mult[r]}: a rational function whose denominator is known
/// to be a product of cyclotomic polynomials. Arithmetic works on the factorization
/// and never takes a polynomial gcd; reduce() cancels common factors by trial division.
class CycloFrac {
 public:
  CycloFrac() = default;
  explicit CycloFrac(const Rat& c) : num_(c) {}
  explicit CycloFrac(Poly num, std::map<int, int> mult = {});

  /// c / (1 - q^k)^e
  static CycloFrac inverse_one_minus_qk(int k, int e, const Rat& c = Rat(1));

  const Poly& num() const { return num_; }
  const std::map<int, int>& mult() const { return mult_; }
  bool is_zero() const { return num_.is_zero(); }
  Poly denominator() const;

  CycloFrac& operator+=(const CycloFrac& b);
  CycloFrac& operator-=(const CycloFrac& b);
  CycloFrac& operator*=(const CycloFrac& b);
  CycloFrac& operator*=(const Poly& p);
  CycloFrac& operator*=(const Rat& c);
  CycloFrac operator-() const;

  friend CycloFrac operator+(CycloFrac a, const CycloFrac& b) { return a += b; }
  friend CycloFrac operator-(CycloFrac a, const CycloFrac& b) { return a -= b; }
  friend CycloFrac operator*(CycloFrac a, const CycloFrac& b) { return a *= b; }
  friend CycloFrac operator*(CycloFrac a, const Rat& c) { return a *= c; }
  friend CycloFrac operator*(CycloFrac a, const Poly& p) { return a *= p; }
  /// Equality as rational functions.
  friend bool operator==(const CycloFrac& a, const CycloFrac& b) { return a.to_qrat() == b.to_qrat(); }

  /// Cancel every cyclotomic factor of the denominator that divides the numerator.
  CycloFrac& reduce();
  /// f(q^k)
  CycloFrac substitute_power(int k) const;
  /// Quotient of num by the denominator: the K_+ part, as there is no pole at q = 0.
  Poly polynomial_part() const;
  QRat to_qrat() const;

 private:
  Poly num_;
  std::map<int, int> mult_;
};

inline bool is_zero(const CycloFrac& a) { return a.is_zero(); }

/// Element of K^0(X)(q) at a fixed Novikov degree: four rational functions of q,
/// the coefficients of 1, x, x^2, x^3 with x = 1 - P.
using KQRat = KElem<QRat>;

KQRat substitute_power(const KQRat& f, int k);
KQRat to_kqrat(const KElem<Poly>& p);
KQRat to_kqrat(const KElem<CycloFrac>& p);
std::string to_string(const KQRat& f);

/// Split f = plus + minus with plus a Laurent polynomial (polynomial part plus the
/// principal part at q = 0) and minus regular at 0 and vanishing at infinity.
struct Polarized {
  QRat plus;
  QRat minus;
};
Polarized project_polarization(const QRat& f);

struct KPolarized {
  KQRat plus;
  KQRat minus;
};
KPolarized project_polarization(const KQRat& f);

/// Laurent expansion of a rational function in u = 1 - zeta q around q = zeta^{-1},
/// zeta the class of t in Q[t]/Phi_r(t).
class LocalExpansion {
 public:
  LocalExpansion(std::shared_ptr<const CycloField> field, int pole_order, int max_order,
                 std::vector<CycloNum> coeffs);

  int root_order() const { return field_->order(); }
  int pole_order() const { return pole_order_; }
  int max_order() const { return max_order_; }
  /// Coefficient of u^k; zero below -pole_order. k must not exceed max_order.
  CycloNum coeff(int k) const;

 private:
  std::shared_ptr<const CycloField> field_;
  int pole_order_;
  int max_order_;
  std::vector<CycloNum> coeffs_;  // u^{-pole_order} .. u^{max_order}
};

LocalExpansion local_expand(const QRat& f, int r, int max_order);
LocalExpansion local_expand(const QRat& f, const std::shared_ptr<const CycloField>& field, int max_order);
std::array<LocalExpansion, 4> local_expand(const KQRat& f, int r, int max_order);

/// p(zeta^{-1} (1 - u)) mod u^terms.
std::vector<CycloNum> taylor_at_inverse_root(const Poly& p, const std::shared_ptr<const CycloField>& field,
                                             int terms);

/// Multiplicity of Phi_r in p.
int cyclotomic_multiplicity(const Poly& p, int r);

/// Denominator factorization into cyclotomic polynomials.
struct CyclotomicSupport {
  std::map<int, int> pole_orders;  // r -> multiplicity of Phi_r
  Poly remainder;                  // monic cofactor free of cyclotomic factors

  bool is_cyclotomic() const { return remainder.is_constant(); }
};
CyclotomicSupport cyclotomic_support(const QRat& f);
/// Per r, the maximum pole order over the four components.
CyclotomicSupport cyclotomic_support(const KQRat& f);

}  // namespace qkgv
