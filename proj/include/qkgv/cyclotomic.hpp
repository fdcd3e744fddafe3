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

#include <memory>
#include <vector>

#include "qkgv/poly.hpp"
#include "qkgv/rat.hpp"

namespace qkgv {

/// The r-th cyclotomic polynomial Phi_r(q); monic with integer coefficients.
Poly cyclotomic_poly(int r);
/// Phi_r^e, memoized; the reference stays valid for the life of the process.
const Poly& cyclotomic_power(int r, int e);

/// The number field Q[t]/Phi_r(t). Shared by every CycloNum of the same order.
class CycloField {
 public:
  explicit CycloField(int r);

  int order() const { return order_; }
  int degree() const { return modulus_.degree(); }
  const Poly& modulus() const { return modulus_; }

 private:
  int order_;
  Poly modulus_;
};

/// Element of Q[t]/Phi_r(t), held densely in the power basis 1, t, ..., t^{phi(r)-1}.
class CycloNum {
 public:
  CycloNum(std::shared_ptr<const CycloField> field, const Poly& rep);
  CycloNum(std::shared_ptr<const CycloField> field, const Rat& c);

  static CycloNum zero(std::shared_ptr<const CycloField> field) { return {std::move(field), Rat(0)}; }
  static CycloNum one(std::shared_ptr<const CycloField> field) { return {std::move(field), Rat(1)}; }
  /// t^k for any integer k (t is a unit of order r).
  static CycloNum root_power(std::shared_ptr<const CycloField> field, long k);

  int order() const { return field_->order(); }
  const std::shared_ptr<const CycloField>& field() const { return field_; }
  /// Coordinates in the power basis, length phi(r).
  std::vector<Rat> coords() const;
  const Poly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  /// True when every coordinate above t^0 vanishes.
  bool is_rational() const { return rep_.degree() <= 0; }
  /// The t^0 coordinate; throws InternalError unless is_rational().
  Rat rational_value() const;

  CycloNum& operator+=(const CycloNum& b);
  CycloNum& operator-=(const CycloNum& b);
  CycloNum& operator*=(const CycloNum& b);
  CycloNum& operator*=(const Rat& c);
  CycloNum operator-() const { return {field_, -rep_}; }

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rat& c) { return a *= c; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.order() == b.order() && a.rep_ == b.rep_;
  }

  /// Field inverse by the extended Euclidean algorithm against Phi_r.
  CycloNum inverse() const;

 private:
  void check_same_field(const CycloNum& b) const;

  std::shared_ptr<const CycloField> field_;
  Poly rep_;
};

inline std::shared_ptr<const CycloField> make_cyclo_field(int r) { return std::make_shared<const CycloField>(r); }

}  // namespace qkgv
