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

#include "qkgv/qrat.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <utility>

#include "qkgv/errors.hpp"
#include "qkgv/numtheory.hpp"

namespace qkgv {

// ---------------------------------------------------------------------------
// QRat

QRat::QRat(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("QRat: zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (den.is_constant()) {
    num_ = num * (Rat(1) / den.coeff(0));
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd(num, den);
  if (g.is_constant()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
  }
  const Rat lead = den_.leading();
  if (lead != 1) {
    num_ *= Rat(1) / lead;
    den_ = den_.monic();
  }
}

QRat QRat::over_cyclotomics(Poly num, const std::map<int, int>& mult, int sign) {
  QRat out;
  if (num.is_zero()) return out;
  Poly den(Rat(1));
  for (const auto& [r, m] : mult) {
    if (m <= 0) continue;
    const Poly& phi = cyclotomic_power(r, 1);
    int left = m;
    while (left > 0) {
      auto [quot, rem] = divmod(num, phi);
      if (!rem.is_zero()) break;
      num = std::move(quot);
      --left;
    }
    if (left > 0) den *= cyclotomic_power(r, left);
  }
  if (sign < 0) num = -num;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

QRat QRat::inverse_one_minus_qk(int k, int e, const Rat& c) {
  if (k < 1 || e < 0) throw PreconditionError("inverse_one_minus_qk: need k >= 1, e >= 0");
  std::map<int, int> mult;
  for (long s : divisors(k)) mult[static_cast<int>(s)] = e;
  return over_cyclotomics(Poly(c), mult, (e % 2 == 0) ? 1 : -1);
}

QRat& QRat::operator+=(const QRat& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    Poly n = num_ + b.num_;
    if (den_.is_constant()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = QRat(n, den_);
  }
  if (den_.is_constant()) {
    num_ = num_ * b.den_ + b.num_;
    den_ = b.den_;
    return *this;
  }
  if (b.den_.is_constant()) {
    num_ += b.num_ * den_;
    return *this;
  }
  const Poly g = gcd(den_, b.den_);
  const Poly bd = exact_div(b.den_, g);
  const Poly ad = exact_div(den_, g);
  Poly n = num_ * bd + b.num_ * ad;
  Poly d = den_ * bd;
  return *this = QRat(n, d);
}

QRat& QRat::operator-=(const QRat& b) { return *this += -b; }

QRat QRat::operator-() const {
  QRat out = *this;
  out.num_ = -num_;
  return out;
}

QRat& QRat::operator*=(const QRat& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = QRat();
  if (den_.is_constant() && b.den_.is_constant()) {
    num_ *= b.num_;
    return *this;
  }
  Poly g1 = b.den_.is_constant() ? Poly(Rat(1)) : gcd(num_, b.den_);
  Poly g2 = den_.is_constant() ? Poly(Rat(1)) : gcd(b.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : exact_div(num_, g1);
  Poly n2 = g2.is_constant() ? b.num_ : exact_div(b.num_, g2);
  Poly d1 = g2.is_constant() ? den_ : exact_div(den_, g2);
  Poly d2 = g1.is_constant() ? b.den_ : exact_div(b.den_, g1);
  num_ = n1 * n2;
  den_ = d1 * d2;
  // both factors monic, so den_ is monic
  return *this;
}

QRat& QRat::operator*=(const Rat& c) {
  if (c == 0) return *this = QRat();
  num_ *= c;
  return *this;
}

QRat& QRat::operator/=(const QRat& b) { return *this *= inverse(b); }

QRat inverse(const QRat& a) {
  if (a.is_zero()) throw DivisionByZero("QRat: inverse of zero");
  return QRat(a.den(), a.num());
}

QRat QRat::substitute_power(int k) const {
  // coprimality and monicity survive q -> q^k
  QRat out;
  out.num_ = num_.substitute_power(k);
  out.den_ = den_.substitute_power(k);
  return out;
}

Rat QRat::eval(const Rat& x) const {
  const Rat d = den_.eval(x);
  if (d == 0) throw DivisionByZero("QRat::eval at a pole");
  return num_.eval(x) / d;
}

std::string QRat::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

KQRat substitute_power(const KQRat& f, int k) {
  return kmap<QRat>(f, [k](const QRat& c) { return c.substitute_power(k); });
}

// ---------------------------------------------------------------------------
// CycloFrac

CycloFrac::CycloFrac(Poly num, std::map<int, int> mult) : num_(std::move(num)), mult_(std::move(mult)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->second < 0) throw PreconditionError("CycloFrac: negative multiplicity");
    it = it->second == 0 ? mult_.erase(it) : std::next(it);
  }
  if (num_.is_zero()) mult_.clear();
}

CycloFrac CycloFrac::inverse_one_minus_qk(int k, int e, const Rat& c) {
  if (k < 1 || e < 0) throw PreconditionError("inverse_one_minus_qk: need k >= 1, e >= 0");
  std::map<int, int> mult;
  if (e > 0)
    for (long s : divisors(k)) mult[static_cast<int>(s)] = e;
  return CycloFrac(Poly(e % 2 == 0 ? c : Rat(-c)), std::move(mult));
}

Poly CycloFrac::denominator() const {
  Poly d(Rat(1));
  for (const auto& [r, m] : mult_) d *= cyclotomic_power(r, m);
  return d;
}

CycloFrac& CycloFrac::operator+=(const CycloFrac& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (mult_ == b.mult_) {
    num_ += b.num_;
    if (num_.is_zero()) mult_.clear();
    return *this;
  }
  std::map<int, int> lcm = mult_;
  for (const auto& [r, m] : b.mult_) lcm[r] = std::max(lcm[r], m);
  Poly fa(Rat(1)), fb(Rat(1));
  for (const auto& [r, m] : lcm) {
    auto ia = mult_.find(r);
    auto ib = b.mult_.find(r);
    const int ma = ia == mult_.end() ? 0 : ia->second;
    const int mb = ib == b.mult_.end() ? 0 : ib->second;
    if (m > ma) fa *= cyclotomic_power(r, m - ma);
    if (m > mb) fb *= cyclotomic_power(r, m - mb);
  }
  num_ = num_ * fa + b.num_ * fb;
  mult_ = std::move(lcm);
  if (num_.is_zero()) mult_.clear();
  return *this;
}

CycloFrac& CycloFrac::operator-=(const CycloFrac& b) { return *this += -b; }

CycloFrac CycloFrac::operator-() const {
  CycloFrac out = *this;
  out.num_ = -num_;
  return out;
}

CycloFrac& CycloFrac::operator*=(const CycloFrac& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = CycloFrac();
  num_ *= b.num_;
  for (const auto& [r, m] : b.mult_) mult_[r] += m;
  return *this;
}

CycloFrac& CycloFrac::operator*=(const Poly& p) {
  num_ *= p;
  if (num_.is_zero()) mult_.clear();
  return *this;
}

CycloFrac& CycloFrac::operator*=(const Rat& c) {
  num_ *= c;
  if (num_.is_zero()) mult_.clear();
  return *this;
}

CycloFrac& CycloFrac::reduce() {
  for (auto it = mult_.begin(); it != mult_.end();) {
    const Poly& phi = cyclotomic_power(it->first, 1);
    while (it->second > 0) {
      auto [quot, rem] = divmod(num_, phi);
      if (!rem.is_zero()) break;
      num_ = std::move(quot);
      --it->second;
    }
    it = it->second == 0 ? mult_.erase(it) : std::next(it);
  }
  return *this;
}

CycloFrac CycloFrac::substitute_power(int k) const {
  if (k < 1) throw PreconditionError("substitute_power: k must be positive");
  // Phi_r(q^p) = Phi_{rp} if p | r, else Phi_{rp} Phi_r; apply one prime at a time.
  std::map<int, int> mult = mult_;
  for (const auto& [p, e] : factorize(k)) {
    for (int i = 0; i < e; ++i) {
      std::map<int, int> next;
      for (const auto& [r, m] : mult) {
        next[r * static_cast<int>(p)] += m;
        if (r % p != 0) next[r] += m;
      }
      mult = std::move(next);
    }
  }
  return CycloFrac(num_.substitute_power(k), std::move(mult));
}

Poly CycloFrac::polynomial_part() const {
  if (mult_.empty()) return num_;
  return divmod(num_, denominator()).first;
}

QRat CycloFrac::to_qrat() const { return QRat::over_cyclotomics(num_, mult_, 1); }

KQRat to_kqrat(const KElem<CycloFrac>& p) {
  return kmap<QRat>(p, [](const CycloFrac& c) { return c.to_qrat(); });
}

KQRat to_kqrat(const KElem<Poly>& p) {
  return kmap<QRat>(p, [](const Poly& c) { return QRat(c); });
}

std::string to_string(const KQRat& f) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << f.c[i].to_string();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Polarization

Polarized project_polarization(const QRat& f) {
  if (f.is_zero()) return {};
  const Poly& den = f.den();
  auto [quot, rem] = divmod(f.num(), den);
  Polarized out{QRat(quot), QRat()};
  if (rem.is_zero()) return out;
  const int s = den.valuation();
  if (s == 0) {
    out.minus = QRat(rem, den);
    return out;
  }
  // rem / (q^s d') = low / q^s + c / d' with deg low < s.
  const Poly dprime = den.shifted(-s);
  const Poly low = (rem * series_inverse(dprime, s)).truncated(s);
  const Poly c = (rem - low * dprime).shifted(-s);
  out.plus += QRat(low, Poly::monomial(Rat(1), s));
  out.minus = QRat(c, dprime);
  return out;
}

KPolarized project_polarization(const KQRat& f) {
  KPolarized out;
  for (int i = 0; i < 4; ++i) {
    Polarized p = project_polarization(f.c[i]);
    out.plus.c[i] = std::move(p.plus);
    out.minus.c[i] = std::move(p.minus);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local expansion

LocalExpansion::LocalExpansion(std::shared_ptr<const CycloField> field, int pole_order, int max_order,
                               std::vector<CycloNum> coeffs)
    : field_(std::move(field)), pole_order_(pole_order), max_order_(max_order), coeffs_(std::move(coeffs)) {}

CycloNum LocalExpansion::coeff(int k) const {
  if (k > max_order_) throw PreconditionError("LocalExpansion::coeff: order beyond the computed range");
  if (k < -pole_order_) return CycloNum::zero(field_);
  return coeffs_.at(static_cast<size_t>(k + pole_order_));
}

std::vector<CycloNum> taylor_at_inverse_root(const Poly& p, const std::shared_ptr<const CycloField>& field,
                                             int terms) {
  std::vector<CycloNum> out;
  if (terms <= 0) return out;
  const int r = field->order();
  const auto& nc = p.int_coeffs();
  // acc[s][rho] = sum over j with (-j mod r) == rho of n_j * C(j, s)
  std::vector<std::vector<Int>> acc(terms, std::vector<Int>(r, Int(0)));
  Int binom;
  for (int j = 0; j <= p.degree(); ++j) {
    if (nc[j] == 0) continue;
    const int rho = static_cast<int>(((-static_cast<long>(j)) % r + r) % r);
    binom = 1;
    for (int s = 0; s < terms && s <= j; ++s) {
      mpz_addmul(acc[s][rho].get_mpz_t(), nc[j].get_mpz_t(), binom.get_mpz_t());
      binom *= (j - s);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(s + 1));
    }
  }
  out.reserve(terms);
  for (int s = 0; s < terms; ++s) {
    Int den = p.denominator();
    if (s % 2 == 1) den = -den;
    out.emplace_back(field, Poly::from_int_coeffs(std::move(acc[s]), den));
  }
  return out;
}

int cyclotomic_multiplicity(const Poly& p, int r) {
  if (p.is_zero()) throw PreconditionError("cyclotomic_multiplicity of zero");
  const Poly phi = cyclotomic_poly(r);
  int m = 0;
  Poly cur = p;
  while (cur.degree() >= phi.degree()) {
    auto [quot, rem] = divmod(cur, phi);
    if (!rem.is_zero()) break;
    cur = std::move(quot);
    ++m;
  }
  return m;
}

LocalExpansion local_expand(const QRat& f, const std::shared_ptr<const CycloField>& field, int max_order) {
  const int m = f.is_zero() ? 0 : cyclotomic_multiplicity(f.den(), field->order());
  const int terms = max_order + m + 1;
  std::vector<CycloNum> coeffs;
  if (terms <= 0) return {field, m, max_order, std::move(coeffs)};
  if (f.is_zero()) {
    coeffs.assign(terms, CycloNum::zero(field));
    return {field, m, max_order, std::move(coeffs)};
  }
  const std::vector<CycloNum> num = taylor_at_inverse_root(f.num(), field, terms);
  std::vector<CycloNum> den = taylor_at_inverse_root(f.den(), field, terms + m);
  for (int i = 0; i < m; ++i)
    if (!den[i].is_zero()) throw InternalError("local_expand: denominator vanishing order mismatch");
  den.erase(den.begin(), den.begin() + m);
  const CycloNum lead_inv = den[0].inverse();
  coeffs.reserve(terms);
  for (int k = 0; k < terms; ++k) {
    CycloNum s = num[k];
    for (int i = 1; i <= k; ++i) s -= den[i] * coeffs[k - i];
    coeffs.push_back(s * lead_inv);
  }
  return {field, m, max_order, std::move(coeffs)};
}

LocalExpansion local_expand(const QRat& f, int r, int max_order) {
  return local_expand(f, make_cyclo_field(r), max_order);
}

std::array<LocalExpansion, 4> local_expand(const KQRat& f, int r, int max_order) {
  auto field = make_cyclo_field(r);
  return {local_expand(f.c[0], field, max_order), local_expand(f.c[1], field, max_order),
          local_expand(f.c[2], field, max_order), local_expand(f.c[3], field, max_order)};
}

// ---------------------------------------------------------------------------
// Cyclotomic support

CyclotomicSupport cyclotomic_support(const QRat& f) {
  CyclotomicSupport out;
  Poly rest = f.den();
  if (rest.degree() <= 0) {
    out.remainder = Poly(Rat(1));
    return out;
  }
  // phi(r) >= sqrt(r / 2), so only r <= 2 deg^2 can contribute.
  const long deg0 = rest.degree();
  for (long r = 1; r <= 2 * deg0 * deg0 + 2 && rest.degree() > 0; ++r) {
    if (euler_phi(r) > rest.degree()) continue;
    const Poly phi = cyclotomic_poly(static_cast<int>(r));
    int m = 0;
    while (rest.degree() >= phi.degree()) {
      auto [quot, rem] = divmod(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++m;
    }
    if (m > 0) out.pole_orders[static_cast<int>(r)] = m;
  }
  out.remainder = rest.is_zero() ? Poly(Rat(1)) : rest.monic();
  return out;
}

CyclotomicSupport cyclotomic_support(const KQRat& f) {
  CyclotomicSupport out;
  out.remainder = Poly(Rat(1));
  for (const auto& comp : f.c) {
    CyclotomicSupport s = cyclotomic_support(comp);
    for (const auto& [r, m] : s.pole_orders) out.pole_orders[r] = std::max(out.pole_orders[r], m);
    if (!s.remainder.is_constant()) {
      const Poly g = gcd(out.remainder, s.remainder);
      out.remainder = exact_div(out.remainder * s.remainder, g);
    }
  }
  return out;
}

}  // namespace qkgv
