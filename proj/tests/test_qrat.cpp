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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qkgv/cyclotomic.hpp"
#include "qkgv/errors.hpp"
#include "qkgv/qrat.hpp"
#include "test_util.hpp"

using namespace qkgv;
using namespace qkgv::testing;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly::from_coeffs(v);
}

const Poly q = Poly::variable();
const Poly one(Rat(1));

QRat inv_one_minus_qk(int k, int e) { return QRat(one, pow(one - Poly::monomial(Rat(1), k), e)); }

}  // namespace

TEST_CASE("normal form") {
  CHECK(QRat(one - pow(q, 2), one - q) == QRat(one + q));
  const QRat f(P({2}), P({4, -4}));
  CHECK(f.den() == P({-1, 1}));
  CHECK(f.num() == Poly(Rat(-1, 2)));
  CHECK_THROWS_AS(QRat(one, Poly()), DivisionByZero);
  CHECK_THROWS_AS(inverse(QRat()), DivisionByZero);
  CHECK(QRat::inverse_one_minus_qk(2, 3, Rat(5)) == QRat(Poly(Rat(5)), pow(one - pow(q, 2), 3)));
  CHECK(QRat::over_cyclotomics(one - pow(q, 2), {{1, 2}, {2, 1}}) == inv_one_minus_qk(1, 1));
}

TEST_CASE("arithmetic") {
  const QRat a = inv_one_minus_qk(1, 1);
  const QRat b = inv_one_minus_qk(1, 2);
  CHECK(a * a == b);
  CHECK(a - a * QRat(q) == QRat(1));
  CHECK((a / b) == QRat(one - q));
  CHECK(a.substitute_power(2) == inv_one_minus_qk(2, 1));
  CHECK(a.eval(Rat(1, 2)) == 2);
}

TEST_CASE("property: field axioms on random rational functions") {
  for (int i = 0; i < 150; ++i) {
    const QRat a = rand_cyclo_qrat(), b = rand_cyclo_qrat(), c = rand_cyclo_qrat();
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a * inverse(QRat(a.den())) * QRat(a.den()) == a);
  }
}

TEST_CASE("polarization examples") {
  {
    const auto [plus, minus] = project_polarization(QRat(pow(q, 2), one - q));
    CHECK(plus == QRat(P({-1, -1})));
    CHECK(minus == inv_one_minus_qk(1, 1));
  }
  {
    const QRat f = QRat(P({1, 3}), q) + inv_one_minus_qk(1, 2);
    const auto [plus, minus] = project_polarization(f);
    CHECK(plus == QRat(P({1, 3}), q));
    CHECK(minus == inv_one_minus_qk(1, 2));
  }
  const auto [plus, minus] = project_polarization(QRat(P({7, 0, 2})));
  CHECK(plus == QRat(P({7, 0, 2})));
  CHECK(minus.is_zero());
}

TEST_CASE("property: polarization idempotence and reassembly") {
  for (int i = 0; i < 200; ++i) {
    const QRat f = rand_cyclo_qrat(4, true);
    const auto [plus, minus] = project_polarization(f);
    CHECK(plus + minus == f);
    // plus is a Laurent polynomial: denominator a power of q
    CHECK(plus.den() == pow(q, plus.den().degree()));
    // minus regular at 0 and vanishing at infinity
    CHECK(minus.den().coeff(0) != 0);
    CHECK((minus.is_zero() || minus.num().degree() < minus.den().degree()));
    const auto pp = project_polarization(plus);
    const auto mm = project_polarization(minus);
    CHECK(pp.plus == plus);
    CHECK(pp.minus.is_zero());
    CHECK(mm.minus == minus);
    CHECK(mm.plus.is_zero());
  }
}

TEST_CASE("local expansion examples") {
  // 1/(1-q) at q = -1: 1/2 + u/4 + ...
  const LocalExpansion a = local_expand(inv_one_minus_qk(1, 1), 2, 2);
  CHECK(a.pole_order() == 0);
  CHECK(a.coeff(0).rational_value() == Rat(1, 2));
  CHECK(a.coeff(1).rational_value() == Rat(1, 4));
  CHECK(a.coeff(-1).is_zero());
  CHECK_THROWS(a.coeff(3));

  const LocalExpansion b = local_expand(inv_one_minus_qk(2, 1), 2, 0);
  CHECK(b.pole_order() == 1);
  CHECK(b.coeff(-1).rational_value() == Rat(1, 2));
}

TEST_CASE("principal parts of 1/(1-q^M)^e at any r | M are rational") {
  for (int M = 1; M <= 6; ++M) {
    for (int r = 1; r <= M; ++r) {
      if (M % r) continue;
      const LocalExpansion e1 = local_expand(inv_one_minus_qk(M, 1), r, 1);
      CHECK(e1.coeff(-1).rational_value() == Rat(1, M));
      CHECK(e1.coeff(0).rational_value() == frac(M - 1, 2 * M));
      CHECK(e1.coeff(1).rational_value() == frac(M * M - 1, 12 * M));
      const LocalExpansion e2 = local_expand(inv_one_minus_qk(M, 2), r, 0);
      CHECK(e2.coeff(-2).rational_value() == Rat(1, M * M));
      CHECK(e2.coeff(-1).rational_value() == frac(M - 1, M * M));
      const LocalExpansion e3 = local_expand(inv_one_minus_qk(M, 3), r, -1);
      CHECK(e3.coeff(-3).rational_value() == Rat(1, M * M * M));
      CHECK(e3.coeff(-2).rational_value() == frac(3 * (M - 1), 2 * M * M * M));
      CHECK(e3.coeff(-1).rational_value() == frac(2 * M * M - 3 * M + 1, 2 * M * M * M));
    }
  }
}

TEST_CASE("property: local expansion re-sums to the function") {
  // With f = N/D and the truncated Laurent sum S, the polynomial
  // N * u^m - D * u^m * S vanishes to order > K + m at q = zeta^{-1}.
  int n = 0;
  while (n < 120) {
    const QRat f = rand_cyclo_qrat(6);
    if (f.is_zero()) continue;
    const int r = static_cast<int>(rand_int(1, 6));
    const int K = static_cast<int>(rand_int(0, 3));
    auto field = make_cyclo_field(r);
    const LocalExpansion e = local_expand(f, field, K);
    const int m = e.pole_order();
    CHECK(m == cyclotomic_multiplicity(f.den(), r));

    const CycloNum zeta = CycloNum::root_power(field, 1);
    const CPoly u = {CycloNum::one(field), -zeta};
    CPoly u_m = {CycloNum::one(field)};
    for (int i = 0; i < m; ++i) u_m = mul(u_m, u);

    CPoly sum = {CycloNum::zero(field)};
    CPoly u_pow = {CycloNum::one(field)};  // u^{k+m}
    for (int k = -m; k <= K; ++k) {
      sum = add(sum, mul(u_pow, CPoly{e.coeff(k)}));
      u_pow = mul(u_pow, u);
    }
    CPoly lhs = mul(lift(f.num(), field), u_m);
    CPoly rhs = mul(lift(f.den(), field), sum);
    for (auto& c : rhs) c = -c;
    const CPoly diff = add(lhs, rhs);
    CHECK(vanishing_order(diff, CycloNum::root_power(field, -1), K + m + 2) >= K + m + 1);
    ++n;
  }
}

TEST_CASE("cyclotomic support") {
  const QRat f = QRat(one, pow(one - q, 2)) * inv_one_minus_qk(2, 1);
  const auto s = cyclotomic_support(f);
  CHECK(s.pole_orders == std::map<int, int>{{1, 3}, {2, 1}});
  CHECK(s.is_cyclotomic());
  CHECK(cyclotomic_support(QRat(one, P({1, 0, 1}))).pole_orders == std::map<int, int>{{4, 1}});
  CHECK_FALSE(cyclotomic_support(QRat(one, P({2, 1, 1}))).is_cyclotomic());
  CHECK(cyclotomic_support(QRat(P({3, 1}))).pole_orders.empty());
}

TEST_CASE("taylor expansion at an inverse root") {
  auto f3 = make_cyclo_field(3);
  // q at zeta^{-1}(1-u): zeta^{-1} - zeta^{-1} u
  const auto t = taylor_at_inverse_root(q, f3, 3);
  CHECK(t[0] == CycloNum::root_power(f3, -1));
  CHECK(t[1] == -CycloNum::root_power(f3, -1));
  CHECK(t[2].is_zero());
}
