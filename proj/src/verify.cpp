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

#include "qkgv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "qkgv/errors.hpp"

namespace qkgv {

namespace {

CycloFrac inv(int e, const Rat& c) { return CycloFrac::inverse_one_minus_qk(1, e, c); }

bool same(const QRat& a, const QRat& b) { return a.num() * b.den() == b.num() * a.den(); }

Verdict verdict(std::string check, int M, int r, int component, bool pass, const std::string& expected,
                const std::string& actual) {
  Verdict v{std::move(check), M, r, component, pass, "", ""};
  if (!pass) {
    v.expected = expected;
    v.actual = actual;
  }
  return v;
}

Rat rational_coeff(const LocalExpansion& e, int k, int M, int r, const char* name) {
  const CycloNum c = e.coeff(k);
  if (!c.is_rational())
    throw InternalError(std::string("extract_coefficients: ") + name + " at M=" + std::to_string(M) +
                        ", r=" + std::to_string(r) + " is not rational");
  return c.rational_value() * 5;
}

template <class F>
void timed(VerifyReport& report, const std::string& key, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  report.seconds[key] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CycloFrac conjecture_a(int d, int r) {
  return (inv(1, Rat(d * (r - 1))) + inv(2, Rat(d))) * Rat(1, 5);
}

CycloFrac conjecture_b(int d, int r) {
  return (inv(1, Rat(r * d + r * r - d - 1)) + inv(2, Rat(d + 3)) + inv(3, Rat(-2))) * Rat(1, 5);
}

NovSeries<KQRat> conjecture_rhs(int max_degree, const GwTable& table) {
  std::vector<KElem<CycloFrac>> acc(max_degree + 1);
  for (int d = 1; d <= max_degree; ++d) {
    const Rat gv = table.gv.at(d);
    for (int r = 1; d * r <= max_degree; ++r) {
      acc[d * r][2] += conjecture_a(d, r).substitute_power(r) * gv;
      acc[d * r][3] += conjecture_b(d, r).substitute_power(r) * gv;
    }
  }
  NovSeries<KQRat> out(max_degree);
  out[0] = KQRat::one();
  for (int m = 1; m <= max_degree; ++m) out[m] = to_kqrat(acc[m]);
  return out;
}

NovSeries<KQRat> fake_j(int max_degree, const GwTable& table) {
  NovSeries<KQRat> out(max_degree);
  out[0] = KQRat::one();
  for (int d = 1; d <= max_degree; ++d) {
    const Rat gw = table.gw.at(d) / 5;
    KElem<CycloFrac> t;
    t[2] = inv(2, gw * d);
    t[3] = inv(2, gw * (3 + d)) + inv(3, gw * -2);
    out[d] = to_kqrat(t);
  }
  return out;
}

CoeffRecord extract_coefficients(const NovSeries<KQRat>& jk_small, int M, int r) {
  if (r < 1 || r > M) throw PreconditionError("extract_coefficients: need 1 <= r <= M");
  if (M > jk_small.order()) throw PreconditionError("extract_coefficients: M exceeds the series order");
  const auto ex = local_expand(jk_small[M], r, -1);
  CoeffRecord c;
  c.M = M;
  c.r = r;
  c.a = rational_coeff(ex[1], -1, M, r, "a");
  c.b = rational_coeff(ex[2], -1, M, r, "b");
  c.c = rational_coeff(ex[2], -2, M, r, "c");
  c.d = rational_coeff(ex[3], -1, M, r, "d");
  c.e = rational_coeff(ex[3], -2, M, r, "e");
  c.f = rational_coeff(ex[3], -3, M, r, "f");
  return c;
}

CoeffRecord predicted_coefficients(const GwTable& table, int M, int r) {
  CoeffRecord c;
  c.M = M;
  c.r = r;
  const Rat d = Rat(M) / r;
  if (!is_integer(d)) return c;
  const Rat m2(M * M), m3(M * M * M);
  const Rat g3 = gv_power(table, 3, d);
  const Rat g1 = gv_power(table, 1, d);
  const Rat gm1 = gv_power(table, -1, d);
  c.c = g3 / m2;
  c.f = -2 * g3 / m3;
  c.b = g1 - g3 / m2;
  c.e = g3 / m2 + 3 * g3 / m3;
  c.d = M * gm1 + g1 - g3 / m2 - g3 / m3;
  return c;
}

bool VerifyReport::all_pass() const { return failures() == 0; }

size_t VerifyReport::failures() const {
  size_t n = 0;
  for (const auto* group : {&identity, &coefficients, &structure})
    n += static_cast<size_t>(std::count_if(group->begin(), group->end(), [](const Verdict& v) { return !v.pass; }));
  return n;
}

void check_identity(const NovSeries<KQRat>& jk_small, const GwTable& table, VerifyReport& report) {
  const int D = report.max_degree;
  const NovSeries<KQRat> rhs = conjecture_rhs(D, table);
  for (int m = 0; m <= D; ++m)
    for (int i = 0; i < 4; ++i) {
      const bool ok = same(jk_small[m][i], rhs[m][i]);
      report.identity.push_back(
          verdict("identity", m, -1, i, ok, rhs[m][i].to_string(), jk_small[m][i].to_string()));
    }
}

void check_coefficient_theorems(const NovSeries<KQRat>& jk_small, const GwTable& table, VerifyReport& report) {
  const int D = report.max_degree;
  for (int m = 1; m <= D; ++m) {
    for (int r = 1; r <= m; ++r) {
      const CoeffRecord got = extract_coefficients(jk_small, m, r);
      const CoeffRecord want = predicted_coefficients(table, m, r);
      const std::pair<const char*, Rat CoeffRecord::*> fields[] = {
          {"coeff.a", &CoeffRecord::a}, {"coeff.b", &CoeffRecord::b}, {"coeff.c", &CoeffRecord::c},
          {"coeff.d", &CoeffRecord::d}, {"coeff.e", &CoeffRecord::e}, {"coeff.f", &CoeffRecord::f}};
      for (const auto& [name, field] : fields)
        report.coefficients.push_back(
            verdict(name, m, r, -1, got.*field == want.*field, to_string(want.*field), to_string(got.*field)));
      if (r == 1) {
        const Rat gw = table.gw.at(m);
        report.coefficients.push_back(
            verdict("coeff.c_r1_gw", m, 1, -1, got.c == gw * m, to_string(gw * m), to_string(got.c)));
        report.coefficients.push_back(
            verdict("coeff.f_r1_gw", m, 1, -1, got.f == gw * -2, to_string(gw * -2), to_string(got.f)));
      }
    }
    // The fake J-function matches the (1-q)^{-2}, (1-q)^{-3} principal parts at q = 1.
    const NovSeries<KQRat> fake = fake_j(m, table);
    const auto fk = local_expand(fake[m], 1, -1);
    const auto jk = local_expand(jk_small[m], 1, -1);
    const std::pair<int, int> slots[] = {{2, -2}, {3, -2}, {3, -3}};
    for (const auto& [i, k] : slots) {
      const Rat want = fk[i].coeff(k).rational_value();
      const Rat got = jk[i].coeff(k).rational_value();
      report.coefficients.push_back(verdict("coeff.fake_j", m, 1, i, want == got, to_string(want), to_string(got)));
    }
  }
}

void check_structure(const NovSeries<KQRat>& jk_small, VerifyReport& report) {
  const int D = report.max_degree;
  for (int m = 1; m <= D; ++m) {
    const CyclotomicSupport sup = cyclotomic_support(jk_small[m]);
    int worst = 0;
    for (const auto& [r, order] : sup.pole_orders) worst = std::max(worst, r);
    report.structure.push_back(verdict("structure.support", m, -1, -1, sup.is_cyclotomic() && worst <= m,
                                       "roots of unity of order <= " + std::to_string(m),
                                       "max order " + std::to_string(worst) +
                                           (sup.is_cyclotomic() ? "" : ", non-cyclotomic factor " +
                                                                           sup.remainder.to_string())));
    for (int i = 0; i < 4; ++i) {
      const QRat& f = jk_small[m][i];
      const CyclotomicSupport s = cyclotomic_support(f);
      int top = 0, at = -1;
      for (const auto& [r, order] : s.pole_orders)
        if (order > top) top = order, at = r;
      report.structure.push_back(verdict("structure.pole_order", m, at, i, top <= i,
                                         "pole order <= " + std::to_string(i),
                                         "pole order " + std::to_string(top)));
      const Polarized p = project_polarization(f);
      report.structure.push_back(
          verdict("structure.k_minus", m, -1, i, p.plus.is_zero(), "0", p.plus.to_string()));
    }
    report.structure.push_back(
        verdict("structure.x0_vanishes", m, -1, 0, jk_small[m][0].is_zero(), "0", jk_small[m][0].to_string()));
  }
}

VerifyReport run_checks(int max_degree, const NovSeries<KQRat>& jk_small, const GwTable& table,
                        const std::set<std::string>& groups) {
  if (max_degree < 1) throw PreconditionError("run_checks: max degree must be at least 1");
  if (jk_small.order() < max_degree || table.max_degree < max_degree)
    throw PreconditionError("run_checks: inputs do not reach the requested degree");
  for (const auto& g : groups)
    if (!all_check_groups().count(g)) throw PreconditionError("run_checks: unknown check group '" + g + "'");
  VerifyReport report;
  report.max_degree = max_degree;
  if (groups.count("identity")) timed(report, "identity", [&] { check_identity(jk_small, table, report); });
  if (groups.count("coeffs")) timed(report, "coeffs", [&] { check_coefficient_theorems(jk_small, table, report); });
  if (groups.count("structure")) timed(report, "structure", [&] { check_structure(jk_small, report); });
  return report;
}

}  // namespace qkgv
