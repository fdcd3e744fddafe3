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

// Shared helpers for the unit tests: deterministic random generators.

#include <random>

#include <memory>
#include <vector>

#include "qkgv/cyclotomic.hpp"
#include "qkgv/kring.hpp"
#include "qkgv/poly.hpp"
#include "qkgv/qrat.hpp"

namespace qkgv::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// a / b in lowest terms.
inline Rat frac(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline Rat rand_rat(long range = 9, long max_den = 5) {
  Rat r(rand_int(-range, range), rand_int(1, max_den));
  r.canonicalize();
  return r;
}

inline Rat rand_nonzero_rat(long range = 9, long max_den = 5) {
  Rat r;
  do r = rand_rat(range, max_den);
  while (r == 0);
  return r;
}

inline Poly rand_poly(int max_deg, long range = 9, long max_den = 3) {
  std::vector<Rat> c(rand_int(0, max_deg) + 1);
  for (auto& x : c) x = rand_rat(range, max_den);
  return Poly::from_coeffs(c);
}

inline KElem<Rat> rand_kelem() {
  return {rand_rat(), rand_rat(), rand_rat(), rand_rat()};
}

/// Random rational function whose denominator is a product of factors (1 - q^k)
/// and, optionally, a power of q.
inline QRat rand_cyclo_qrat(int max_k = 4, bool allow_q_pole = false) {
  Poly den(Rat(1));
  const int nfac = static_cast<int>(rand_int(0, 3));
  for (int i = 0; i < nfac; ++i) {
    const int k = static_cast<int>(rand_int(1, max_k));
    den *= Poly(Rat(1)) - Poly::monomial(Rat(1), k);
  }
  if (allow_q_pole) den = den.shifted(static_cast<int>(rand_int(0, 2)));
  return QRat(rand_poly(6), den);
}

// Polynomials in q with coefficients in a cyclotomic field, low to high.
using CPoly = std::vector<CycloNum>;

inline CPoly lift(const Poly& p, const std::shared_ptr<const CycloField>& f) {
  CPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.emplace_back(f, p.coeff(i));
  if (out.empty()) out.push_back(CycloNum::zero(f));
  return out;
}

inline CPoly mul(const CPoly& a, const CPoly& b) {
  CPoly out(a.size() + b.size() - 1, CycloNum::zero(a[0].field()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline CPoly add(CPoly a, const CPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), CycloNum::zero(b[0].field()));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// Order of vanishing at q = root, by repeated synthetic division (capped).
inline int vanishing_order(CPoly p, const CycloNum& root, int cap) {
  for (int n = 0; n < cap; ++n) {
    bool all_zero = true;
    for (const auto& c : p) all_zero = all_zero && c.is_zero();
    if (all_zero) return cap;
    // Horner: p = (q - root) * s + rem
    CPoly s(p.size() - 1, CycloNum::zero(root.field()));
    CycloNum acc = CycloNum::zero(root.field());
    for (size_t i = p.size(); i-- > 0;) {
      acc = acc * root + p[i];
      if (i > 0) s[i - 1] = acc;
    }
    if (!acc.is_zero()) return n;
    p = s.empty() ? CPoly{CycloNum::zero(root.field())} : s;
  }
  return cap;
}

}  // namespace qkgv::testing
