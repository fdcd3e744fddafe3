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

#include <algorithm>
#include <utility>
#include <vector>

#include "qkgv/errors.hpp"
#include "qkgv/kring.hpp"
#include "qkgv/rat.hpp"

namespace qkgv {

template <class R>
R scale_by(const R& a, const Rat& c) {
  return a * c;
}

template <class S>
KElem<S> scale_by(const KElem<S>& a, const Rat& c) {
  return kmap<S>(a, [&c](const S& s) { return scale_by(s, c); });
}

/// Power series in the Novikov variable Q truncated after Q^order, with
/// coefficients in a ring R (Rat, QRat, KQRat, KElem<Rat>, ...).
///
/// Binary operations truncate to the smaller of the operand orders.
template <class R>
class NovSeries {
 public:
  NovSeries() : coeffs_(1) {}
  explicit NovSeries(int order) : coeffs_(checked_size(order)) {}
  NovSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { coeffs_.resize(checked_size(order)); }

  static NovSeries constant(int order, const R& c) {
    NovSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// c * Q^degree (zero if degree exceeds the order).
  static NovSeries monomial(int order, const R& c, int degree) {
    NovSeries s(order);
    if (degree >= 0 && degree <= order) s.coeffs_[degree] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int d) const { return coeffs_.at(d); }
  R& operator[](int d) { return coeffs_.at(d); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Lowest degree with a nonzero coefficient, order() + 1 for the zero series.
  int valuation() const {
    using qkgv::is_zero;
    for (int d = 0; d <= order(); ++d)
      if (!is_zero(coeffs_[d])) return d;
    return order() + 1;
  }

  NovSeries truncated(int order) const {
    std::vector<R> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return NovSeries(std::min(order, this->order()), std::move(c));
  }

  NovSeries& operator+=(const NovSeries& b) {
    coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  NovSeries& operator-=(const NovSeries& b) {
    coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }
  NovSeries operator-() const {
    NovSeries out(order());
    for (int i = 0; i <= order(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
  }
  NovSeries& operator*=(const R& c) {
    for (auto& x : coeffs_) x = x * c;
    return *this;
  }

  friend NovSeries operator+(NovSeries a, const NovSeries& b) { return a += b; }
  friend NovSeries operator-(NovSeries a, const NovSeries& b) { return a -= b; }
  friend NovSeries operator*(NovSeries a, const R& c) { return a *= c; }

  /// Cauchy product truncated at min(order(a), order(b)).
  friend NovSeries operator*(const NovSeries& a, const NovSeries& b) {
    using qkgv::is_zero;
    const int n = std::min(a.order(), b.order());
    NovSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const NovSeries& a, const NovSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static size_t checked_size(int order) {
    if (order < 0) throw PreconditionError("NovSeries: negative truncation order");
    return static_cast<size_t>(order) + 1;
  }

  std::vector<R> coeffs_;
};

template <class R>
NovSeries<R> scale_by(const NovSeries<R>& a, const Rat& c) {
  NovSeries<R> out(a.order());
  for (int i = 0; i <= a.order(); ++i) out[i] = scale_by(a[i], c);
  return out;
}

/// exp(a) = sum_{n=0}^{D} a^n / n!, for a with vanishing constant term.
template <class R>
NovSeries<R> series_exp(const NovSeries<R>& a) {
  using qkgv::is_zero;
  if (!is_zero(a[0])) throw PreconditionError("series_exp: constant term must vanish");
  const int n = a.order();
  NovSeries<R> out = NovSeries<R>::constant(n, R(Rat(1)));
  NovSeries<R> power = out;
  Rat inv_fact(1);
  for (int k = 1; k <= n; ++k) {
    power = power * a;
    inv_fact /= k;
    out += scale_by(power, inv_fact);
  }
  return out;
}

/// Psi^k on Novikov variables: Q^j -> Q^{kj}. Coefficients are left alone; a
/// caller that needs Psi^k on K-valued coefficients composes with adams_k.
template <class R>
NovSeries<R> adams_novikov(int k, const NovSeries<R>& a) {
  if (k < 1) throw PreconditionError("adams_novikov: k must be positive");
  NovSeries<R> out(a.order());
  for (int j = 0; j * k <= a.order(); ++j) out[j * k] = a[j];
  return out;
}

template <class T, class R, class F>
NovSeries<T> map_coeffs(const NovSeries<R>& a, F&& f) {
  NovSeries<T> out(a.order());
  for (int i = 0; i <= a.order(); ++i) out[i] = f(a[i]);
  return out;
}

}  // namespace qkgv
