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
#include "qkgv/gwside.hpp"
#include "qkgv/qkside.hpp"
#include "qkgv/verify.hpp"

using namespace qkgv;

namespace {

struct Fixture {
  GwTable table = gw_invariants(5);
  ReconState state = reconstruct_jk(5);
  NovSeries<KQRat> js = jk_small(state);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

QRat inv1mq(int e, long c) { return QRat::inverse_one_minus_qk(1, e, Rat(c)); }

}  // namespace

TEST_CASE("conjecture coefficients") {
  CHECK(conjecture_a(1, 1).to_qrat() * Rat(5) == inv1mq(2, 1));
  CHECK(conjecture_b(1, 1).to_qrat() * Rat(5) == inv1mq(2, 4) - inv1mq(3, 2));
  // 5 a(2, 3, q) = 4/(1-q) + 2/(1-q)^2
  CHECK(conjecture_a(2, 3).to_qrat() * Rat(5) == inv1mq(1, 4) + inv1mq(2, 2));
}

TEST_CASE("conjecture right-hand side") {
  const NovSeries<KQRat> rhs = conjecture_rhs(3, fixture().table);
  CHECK(rhs[0] == KQRat::one());
  const KQRat q1(QRat(), QRat(), inv1mq(2, 575), inv1mq(2, 2300) - inv1mq(3, 1150));
  CHECK(rhs[1] == q1);
  for (int m = 1; m <= 3; ++m) {
    CHECK(rhs[m][0].is_zero());
    CHECK(rhs[m][1].is_zero());
  }
  // Q^2 picks up d=2, r=1 and d=1, r=2; the latter has poles at q = -1.
  CHECK(cyclotomic_support(rhs[2]).pole_orders.count(2));
}

TEST_CASE("fake J at degree one") {
  const NovSeries<KQRat> f = fake_j(2, fixture().table);
  CHECK(f[1] == conjecture_rhs(1, fixture().table)[1]);
}

TEST_CASE("coefficient extraction examples") {
  const auto& js = fixture().js;
  const CoeffRecord c11 = extract_coefficients(js, 1, 1);
  CHECK(c11.a == 0);
  CHECK(c11.b == 0);
  CHECK(c11.c == 2875);
  CHECK(c11.d == 0);
  CHECK(c11.e == 11500);
  CHECK(c11.f == -5750);

  const CoeffRecord c22 = extract_coefficients(js, 2, 2);
  CHECK(c22.c == Rat(2875, 4));
  CHECK(c22.f == Rat(-2875, 4));
  CHECK(c22.b == Rat(8625, 4));
  CHECK(c22.d == Rat(60375, 8));

  const CoeffRecord c21 = extract_coefficients(js, 2, 1);
  CHECK(c21.c == Rat(4876875, 4));
  CHECK(c21.c == 2 * fixture().table.gw.at(2));

  const CoeffRecord c32 = extract_coefficients(js, 3, 2);
  CHECK(c32 == CoeffRecord{3, 2, 0, 0, 0, 0, 0, 0});

  CHECK_THROWS_AS(extract_coefficients(js, 2, 3), PreconditionError);
  CHECK_THROWS_AS(extract_coefficients(js, 9, 1), PreconditionError);
}

TEST_CASE("predicted coefficients agree with extraction") {
  const auto& f = fixture();
  for (int m = 1; m <= 5; ++m)
    for (int r = 1; r <= m; ++r) CHECK(extract_coefficients(f.js, m, r) == predicted_coefficients(f.table, m, r));
  CHECK(predicted_coefficients(f.table, 1, 1) == CoeffRecord{1, 1, 0, 0, 2875, 0, 11500, -5750});
}

TEST_CASE("full verification through degree 5") {
  const auto& f = fixture();
  const VerifyReport rep = run_checks(5, f.js, f.table);
  CHECK(rep.all_pass());
  CHECK(rep.identity.size() == 24);
  CHECK(rep.seconds.size() == 3);
  CHECK_FALSE(rep.structure.empty());
  CHECK_FALSE(rep.coefficients.empty());
}

TEST_CASE("a perturbed left-hand side is caught with the mismatching objects") {
  const auto& f = fixture();
  NovSeries<KQRat> bad = f.js;
  bad[3][2] += QRat(Rat(1));
  const VerifyReport rep = run_checks(3, bad, f.table, {"identity", "structure"});
  CHECK_FALSE(rep.all_pass());
  int failed = 0;
  for (const auto& v : rep.identity)
    if (!v.pass) {
      ++failed;
      CHECK(v.M == 3);
      CHECK(v.component == 2);
      CHECK_FALSE(v.expected.empty());
      CHECK(v.expected != v.actual);
    }
  CHECK(failed == 1);
  // The added constant also has a K_+ part.
  bool caught = false;
  for (const auto& v : rep.structure) caught = caught || (!v.pass && v.check == "structure.k_minus");
  CHECK(caught);
}

TEST_CASE("a pole at a far root of unity fails the support check") {
  const auto& f = fixture();
  NovSeries<KQRat> bad = f.js;
  bad[2][3] += QRat::inverse_one_minus_qk(5, 1);
  const VerifyReport rep = run_checks(2, bad, f.table, {"structure"});
  bool caught = false;
  for (const auto& v : rep.structure) caught = caught || (!v.pass && v.check == "structure.support" && v.M == 2);
  CHECK(caught);
}

TEST_CASE("a second-order pole in the x^1 slot fails the pole-order check") {
  const auto& f = fixture();
  NovSeries<KQRat> bad = f.js;
  bad[2][1] += QRat::inverse_one_minus_qk(1, 2);
  const VerifyReport rep = run_checks(2, bad, f.table, {"structure"});
  bool caught = false;
  for (const auto& v : rep.structure) caught = caught || (!v.pass && v.check == "structure.pole_order");
  CHECK(caught);
}

TEST_CASE("non-rational extraction is an internal error") {
  NovSeries<KQRat> bad = fixture().js;
  // q/(1 - q^3) has residues at primitive cube roots that depend on the root.
  bad[3][2] += QRat(Poly::variable()) * QRat::inverse_one_minus_qk(3, 1);
  CHECK_THROWS_AS(extract_coefficients(bad, 3, 3), InternalError);
}

TEST_CASE("check group validation") {
  const auto& f = fixture();
  CHECK_THROWS_AS(run_checks(3, f.js, f.table, {"bogus"}), PreconditionError);
  CHECK_THROWS_AS(run_checks(7, f.js, f.table), PreconditionError);
}
