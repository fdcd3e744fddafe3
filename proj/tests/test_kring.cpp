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

#include "qkgv/errors.hpp"
#include "qkgv/kring.hpp"
#include "test_util.hpp"

using namespace qkgv;
using qkgv::testing::rand_int;
using qkgv::testing::rand_kelem;
using qkgv::testing::rand_rat;

using K = KElem<Rat>;

namespace {

// P^k by repeated multiplication, for k >= 0.
K p_power_naive(int k) {
  K p(Rat(1), Rat(-1), Rat(0), Rat(0));
  K out = K::one();
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

// Psi^k by substituting x -> 1 - P^k with P^k computed naively.
K adams_naive(int k, const K& a) {
  const K y = K::one() - p_power_naive(k);
  K out;
  K pw = K::one();
  for (int i = 0; i < 4; ++i) {
    out += pw * a[i];
    pw = pw * y;
  }
  return out;
}

}  // namespace

TEST_CASE("ring structure examples") {
  const K x = K::basis(1);
  CHECK(x * x * x * x == K());
  CHECK(x * x * x == K::basis(3));
  CHECK(k_inv(K(Rat(2), Rat(1), Rat(0), Rat(0))) == K(Rat(1, 2), Rat(-1, 4), Rat(1, 8), Rat(-1, 16)));
  CHECK_THROWS_AS(k_inv(K::basis(1)), PreconditionError);
  // P^{-1} = 1 + x + x^2 + x^3
  CHECK(p_power<Rat>(-1) == K(Rat(1), Rat(1), Rat(1), Rat(1)));
  CHECK(p_power<Rat>(5) == p_power_naive(5));
}

TEST_CASE("adams operation examples") {
  const K x = K::basis(1);
  CHECK(adams_k(2, x) == K(Rat(0), Rat(2), Rat(-1), Rat(0)));
  CHECK(adams_k(3, x) == K(Rat(0), Rat(3), Rat(-3), Rat(1)));
  CHECK(adams_k(1, K(Rat(4), Rat(-2), Rat(7), Rat(1, 3))) == K(Rat(4), Rat(-2), Rat(7), Rat(1, 3)));
  CHECK_THROWS_AS(adams_k(0, x), PreconditionError);
}

TEST_CASE("pairing matrix") {
  const auto& g = pairing_matrix();
  const long expect[4][4] = {{0, 5, -5, 5}, {5, -5, 5, 0}, {-5, 5, 0, 0}, {5, 0, 0, 0}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(g[a][b] == Rat(expect[a][b]));
  CHECK(k_pairing(K::one(), K::basis(3)) == 5);
  CHECK(k_pairing(K::one(), K::one()) == 0);
}

TEST_CASE("dual basis closed forms") {
  const auto phi = dual_basis();
  CHECK(phi[0] == K(Rat(0), Rat(0), Rat(0), Rat(1, 5)));
  CHECK(phi[1] == K(Rat(0), Rat(0), Rat(1, 5), Rat(1, 5)));
  CHECK(phi[2] == K(Rat(0), Rat(1, 5), Rat(1, 5), Rat(0)));
  CHECK(phi[3] == K(Rat(1, 5), Rat(1, 5), Rat(0), Rat(-1, 5)));
}

TEST_CASE("property: duality delta_ab") {
  const auto phi = dual_basis();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(k_pairing(K::basis(a), phi[b]) == Rat(a == b ? 1 : 0));
  // Random elements expand in the basis Phi_a with coordinates (a, Phi^b).
  for (int i = 0; i < 200; ++i) {
    const K v = rand_kelem();
    K rebuilt;
    for (int b = 0; b < 4; ++b) rebuilt += K::basis(b) * k_pairing(v, phi[b]);
    CHECK(rebuilt == v);
  }
}

TEST_CASE("property: commutative ring axioms") {
  for (int i = 0; i < 200; ++i) {
    const K a = rand_kelem(), b = rand_kelem(), c = rand_kelem();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * K::one() == a);
  }
}

TEST_CASE("property: inverse of units") {
  int n = 0;
  while (n < 200) {
    K a = rand_kelem();
    if (a[0] == 0) continue;
    CHECK(a * k_inv(a) == K::one());
    ++n;
  }
}

TEST_CASE("property: Psi^k is a ring map and Psi^k Psi^l = Psi^{kl}") {
  for (int i = 0; i < 200; ++i) {
    const int k = static_cast<int>(rand_int(1, 7));
    const int l = static_cast<int>(rand_int(1, 7));
    const K a = rand_kelem(), b = rand_kelem();
    CHECK(adams_k(k, adams_k(l, a)) == adams_k(k * l, a));
    CHECK(adams_k(k, a * b) == adams_k(k, a) * adams_k(k, b));
    CHECK(adams_k(k, a + b) == adams_k(k, a) + adams_k(k, b));
    CHECK(adams_k(k, a) == adams_naive(k, a));
  }
}

TEST_CASE("property: P^k P^l = P^{k+l} for negative exponents") {
  for (int i = 0; i < 100; ++i) {
    const long k = rand_int(-10, 10), l = rand_int(-10, 10);
    CHECK(p_power<Rat>(k) * p_power<Rat>(l) == p_power<Rat>(k + l));
  }
}
