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
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "qkgv/errors.hpp"
#include "qkgv/rat.hpp"

namespace qkgv {

inline Rat inverse(const Rat& a) {
  if (a == 0) throw DivisionByZero("inverse of rational zero");
  return Rat(1) / a;
}
inline bool is_zero(const Rat& a) { return a == 0; }

/// Element of Q[x]/(x^4) with coefficients in a scalar ring S, in the basis
/// {1, x, x^2, x^3}.
///
/// On the K-theory side x = 1 - P, P = O(-1)|_X, so KElem is K^0 of the quintic
/// (tensored with S). On the cohomology side the same type is read with x = H.
/// S must be a commutative ring constructible from Rat; inversion goes through
/// an `inverse(S)` overload found by ordinary or argument-dependent lookup.
template <class S>
struct KElem {
  static constexpr int kRank = 4;
  std::array<S, kRank> c{};

  KElem() = default;
  explicit KElem(const S& scalar) { c[0] = scalar; }
  explicit KElem(const Rat& scalar)
    requires(!std::is_same_v<S, Rat>)
  {
    c[0] = S(scalar);
  }
  KElem(S c0, S c1, S c2, S c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static KElem one() { return KElem(S(Rat(1))); }
  /// coeff * x^i
  static KElem basis(int i, const S& coeff = S(Rat(1))) {
    KElem e;
    e.c.at(i) = coeff;
    return e;
  }

  const S& operator[](int i) const { return c[i]; }
  S& operator[](int i) { return c[i]; }

  bool is_zero() const {
    for (const auto& s : c)
      if (!qkgv_is_zero(s)) return false;
    return true;
  }

  KElem& operator+=(const KElem& b) {
    for (int i = 0; i < kRank; ++i) c[i] += b.c[i];
    return *this;
  }
  KElem& operator-=(const KElem& b) {
    for (int i = 0; i < kRank; ++i) c[i] -= b.c[i];
    return *this;
  }
  KElem& operator*=(const S& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  KElem operator-() const {
    KElem out;
    for (int i = 0; i < kRank; ++i) out.c[i] = -c[i];
    return out;
  }

  friend KElem operator+(KElem a, const KElem& b) { return a += b; }
  friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
  friend KElem operator*(KElem a, const S& s) { return a *= s; }
  friend KElem operator*(const S& s, KElem a) { return a *= s; }

  /// Product in S[x]/(x^4): c_k = sum_{i+j=k} a_i b_j for k <= 3.
  friend KElem operator*(const KElem& a, const KElem& b) {
    KElem out;
    for (int i = 0; i < kRank; ++i) {
      if (qkgv_is_zero(a.c[i])) continue;
      for (int j = 0; i + j < kRank; ++j) {
        if (qkgv_is_zero(b.c[j])) continue;
        out.c[i + j] += a.c[i] * b.c[j];
      }
    }
    return out;
  }
  KElem& operator*=(const KElem& b) { return *this = *this * b; }

  friend bool operator==(const KElem& a, const KElem& b) { return a.c == b.c; }

 private:
  static bool qkgv_is_zero(const S& s) {
    using qkgv::is_zero;
    return is_zero(s);
  }
};

template <class S>
bool is_zero(const KElem<S>& a) {
  return a.is_zero();
}

/// Inverse of a unit: a^{-1} = a0^{-1} sum_{k=0..3} (-n/a0)^k with n = a - a0.
template <class S>
KElem<S> k_inv(const KElem<S>& a) {
  using qkgv::inverse;
  if (KElem<S>(a.c[0]).is_zero()) throw PreconditionError("k_inv: scalar part is zero, element is not a unit");
  const S a0inv = inverse(a.c[0]);
  KElem<S> t = a;
  t.c[0] = S(Rat(0));
  t *= -a0inv;
  KElem<S> out = KElem<S>::one();
  KElem<S> pw = KElem<S>::one();
  for (int k = 1; k < KElem<S>::kRank; ++k) {
    pw = pw * t;
    out += pw;
  }
  out *= a0inv;
  return out;
}

/// (1 - x)^k for any integer k, i.e. P^k.
template <class S>
KElem<S> p_power(long k) {
  KElem<S> out;
  Rat binom(1);  // generalized binomial C(k, i)
  for (int i = 0; i < KElem<S>::kRank; ++i) {
    out.c[i] = S((i % 2 == 0) ? binom : Rat(-binom));
    binom *= Rat(k - i);
    binom /= Rat(i + 1);
  }
  return out;
}

/// Adams operation: the ring endomorphism with Psi^k(P) = P^k, acting trivially
/// on scalars. In x-coordinates x -> 1 - (1 - x)^k.
template <class S>
KElem<S> adams_k(int k, const KElem<S>& a) {
  if (k < 1) throw PreconditionError("adams_k: k must be positive");
  KElem<S> image_x = KElem<S>::one() - p_power<S>(k);
  KElem<S> out;
  KElem<S> pw = KElem<S>::one();
  for (int i = 0; i < KElem<S>::kRank; ++i) {
    out += pw * a.c[i];
    pw = pw * image_x;
  }
  return out;
}

/// Apply f to every coordinate.
template <class T, class S, class F>
KElem<T> kmap(const KElem<S>& a, F&& f) {
  KElem<T> out;
  for (int i = 0; i < KElem<S>::kRank; ++i) out.c[i] = f(a.c[i]);
  return out;
}

using PairingMatrix = std::array<std::array<Rat, 4>, 4>;

/// chi(X, Phi_a Phi_b) on the basis Phi_a = (1 - P)^a of the quintic.
const PairingMatrix& pairing_matrix();

Rat k_pairing(const KElem<Rat>& a, const KElem<Rat>& b);

/// Phi^0..Phi^3, dual to Phi_a under k_pairing.
std::array<KElem<Rat>, 4> dual_basis();

std::string to_string(const KElem<Rat>& a);

}  // namespace qkgv
