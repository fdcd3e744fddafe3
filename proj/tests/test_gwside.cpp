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
#include "qkgv/numtheory.hpp"
#include "test_util.hpp"

using namespace qkgv;
using qkgv::testing::rand_int;

using KR = KElem<Rat>;

namespace {

// prod_{m<=5d}(1 + 5y/m) / prod_{m<=d}(1 + y/m)^5 via exp of the log expansion,
// log(1 + a y) = sum_k (-1)^{k+1} a^k y^k / k, with power sums of 1/m.
KR normalized_by_power_sums(int d) {
  KR log_part;
  for (int k = 1; k <= 3; ++k) {
    Rat p5(0), p1(0);
    for (int m = 1; m <= 5 * d; ++m) p5 += Rat(1) / rat_pow(Rat(m), k);
    for (int m = 1; m <= d; ++m) p1 += Rat(1) / rat_pow(Rat(m), k);
    const Rat sign(k % 2 ? 1 : -1);
    log_part[k] = sign * (rat_pow(Rat(5), k) * p5 - 5 * p1) / k;
  }
  KR out = KR::one() + log_part + log_part * log_part * Rat(1, 2) + log_part * log_part * log_part * Rat(1, 6);
  Int f = factorial(5 * d);
  Int g = factorial(d);
  return out * (Rat(f) / Rat(g * g * g * g * g));
}

const char* kGw[] = {"2875", "4876875/8", "8564575000/27", "15517926796875/64"};
const char* kGv[] = {"2875", "609250", "317206375", "242467530000"};

}  // namespace

TEST_CASE("I^H examples") {
  CHECK(i_function_h_normalized(0) == KR::one());
  const KR& i1 = i_function_h_normalized(1);
  CHECK(i1[0] == 120);
  CHECK(i1[1] == 770);
  CHECK(i1[1] == Rat(120 * 5) * (Rat(1, 2) + Rat(1, 3) + Rat(1, 4) + Rat(1, 5)));
  const auto ih = i_function_h(2);
  CHECK(ih[0].terms.size() == 1);
  CHECK(ih[0].coefficient(1) == KR::one());
  CHECK(ih[1].coefficient(0) == KR::basis(1, Rat(770)));
  CHECK_THROWS_AS(i_function_h_normalized(-1), PreconditionError);
}

TEST_CASE("I^H agrees with the power-sum expansion") {
  for (int d = 0; d <= 8; ++d) CHECK(i_function_h_normalized(d) == normalized_by_power_sums(d));
}

TEST_CASE("reconstruction normalization") {
  const JhReconstruction jh = reconstruct_jh(5);
  CHECK(jh.tau[0] == 0);
  CHECK(jh.c[0] == 1);
  // Independent solve at Q^1: the y^1 condition reads a_1 F_1 - tau_1 = 0.
  CHECK(jh.tau[1] == i_function_h_normalized(1)[1]);
  CHECK(abs(jh.tau[1]) == 770);
  // y^0 condition at Q^1: F_1 + c_1 = 0.
  CHECK(jh.c[1] == -120);
  for (int m = 1; m <= 5; ++m) {
    CHECK(jh.normalized[m][0] == 0);
    CHECK(jh.normalized[m][1] == 0);
    CHECK(jh.jh[m].coefficient(1).is_zero());
  }
  CHECK(jh.normalized[0] == KR::one());
  CHECK_THROWS_AS(reconstruct_jh(0), PreconditionError);
}

TEST_CASE("GW and GV table through degree 4") {
  const GwTable t = gw_invariants(4);
  CHECK(t.convention == GwConvention::kOneFifth);
  for (int d = 1; d <= 4; ++d) {
    CHECK(t.gw.at(d) == parse_rat(kGw[d - 1]));
    CHECK(t.gv.at(d) == parse_rat(kGv[d - 1]));
  }
}

TEST_CASE("H^3 to H^2 readout ratio is -2/d") {
  const JhReconstruction jh = reconstruct_jh(6);
  for (int d = 1; d <= 6; ++d) CHECK(jh.normalized[d][3] / jh.normalized[d][2] == Rat(-2) / d);
}

TEST_CASE("GV integrality through degree 10") {
  const GwTable t = gw_invariants(10);
  for (int d = 1; d <= 10; ++d) {
    CHECK(is_integer(t.gv.at(d)));
    CHECK(gw_from_gv(t, d) == t.gw.at(d));
  }
  CHECK(t.gv.at(5) == parse_rat("229305888887625"));
}

TEST_CASE("GV power sums") {
  const GwTable t = gw_invariants(4);
  CHECK(gv_power(t, 3, Rat(1)) == 2875);
  CHECK(gv_power(t, 3, Rat(2)) == 4876875);
  CHECK(gv_power(t, 3, Rat(2)) == 8 * t.gw.at(2));
  CHECK(gv_power(t, 1, Rat(3, 2)) == 0);
  CHECK(gv_power(t, -1, Rat(0)) == 0);
  CHECK(gv_power(t, -1, Rat(2)) == Rat(2875) + Rat(609250) / 2);
  CHECK_THROWS_AS(gv_power(t, 1, Rat(5)), PreconditionError);
}

TEST_CASE("non-integral GV is an internal error") {
  GwTable t;
  t.max_degree = 2;
  t.gw = {{1, Rat(1)}, {2, Rat(1)}};
  CHECK_THROWS_AS(gv_from_gw(t), InternalError);
}

TEST_CASE("property: Mobius round trip GV -> GW -> GV") {
  for (int i = 0; i < 150; ++i) {
    GwTable t;
    t.max_degree = static_cast<int>(rand_int(1, 30));
    for (int d = 1; d <= t.max_degree; ++d) t.gv[d] = Rat(rand_int(-1000000, 1000000));
    const auto gv = t.gv;
    for (int d = 1; d <= t.max_degree; ++d) t.gw[d] = gw_from_gv(t, d);
    gv_from_gw(t);
    CHECK(t.gv == gv);
  }
}
