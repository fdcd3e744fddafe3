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

#include "qkgv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "qkgv/errors.hpp"
#include "qkgv/numtheory.hpp"

namespace qkgv {

Poly cyclotomic_poly(int r) {
  if (r < 1) throw PreconditionError("cyclotomic_poly: r must be positive");
  // Phi_r = prod_{d | r} (q^d - 1)^{mu(r/d)}
  Poly num(Rat(1)), den(Rat(1));
  for (long d : divisors(r)) {
    const int mu = mobius(r / d);
    if (mu == 0) continue;
    Poly f = Poly::monomial(Rat(1), static_cast<int>(d)) - Poly(Rat(1));
    if (mu > 0)
      num *= f;
    else
      den *= f;
  }
  return exact_div(num, den);
}

const Poly& cyclotomic_power(int r, int e) {
  if (e < 0) throw PreconditionError("cyclotomic_power: negative exponent");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Poly> memo;
  std::lock_guard lock(mu);
  auto it = memo.find({r, e});
  if (it != memo.end()) return it->second;
  Poly p(Rat(1));
  if (e > 0) {
    auto base = memo.find({r, 1});
    const Poly phi = base != memo.end() ? base->second : cyclotomic_poly(r);
    p = pow(phi, e);
  }
  return memo.emplace(std::make_pair(r, e), std::move(p)).first->second;
}

CycloField::CycloField(int r) : order_(r), modulus_(cyclotomic_poly(r)) {}

CycloNum::CycloNum(std::shared_ptr<const CycloField> field, const Poly& rep) : field_(std::move(field)) {
  if (!field_) throw PreconditionError("CycloNum: null field");
  rep_ = rep.degree() >= field_->degree() ? divmod(rep, field_->modulus()).second : rep;
}

CycloNum::CycloNum(std::shared_ptr<const CycloField> field, const Rat& c) : field_(std::move(field)), rep_(c) {
  if (!field_) throw PreconditionError("CycloNum: null field");
}

CycloNum CycloNum::root_power(std::shared_ptr<const CycloField> field, long k) {
  const long r = field->order();
  long e = k % r;
  if (e < 0) e += r;
  return {field, Poly::monomial(Rat(1), static_cast<int>(e))};
}

std::vector<Rat> CycloNum::coords() const {
  std::vector<Rat> out(field_->degree());
  for (int i = 0; i < field_->degree(); ++i) out[i] = rep_.coeff(i);
  return out;
}

Rat CycloNum::rational_value() const {
  if (!is_rational()) throw InternalError("CycloNum::rational_value: element is not rational");
  return rep_.coeff(0);
}

void CycloNum::check_same_field(const CycloNum& b) const {
  if (order() != b.order()) throw PreconditionError("CycloNum: operands of different cyclotomic orders");
}

CycloNum& CycloNum::operator+=(const CycloNum& b) {
  check_same_field(b);
  rep_ += b.rep_;
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) {
  check_same_field(b);
  rep_ -= b.rep_;
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& b) {
  check_same_field(b);
  Poly p = rep_ * b.rep_;
  rep_ = p.degree() >= field_->degree() ? divmod(p, field_->modulus()).second : std::move(p);
  return *this;
}

CycloNum& CycloNum::operator*=(const Rat& c) {
  rep_ *= c;
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("CycloNum::inverse of zero");
  Xgcd e = xgcd(rep_, field_->modulus());
  // Phi_r is irreducible, so the gcd with any nonzero residue is 1.
  if (e.g.degree() != 0) throw InternalError("CycloNum::inverse: residue shares a factor with Phi_r");
  return {field_, e.s};
}

}  // namespace qkgv
