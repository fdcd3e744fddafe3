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

#include "qkgv/gwside.hpp"

#include <mutex>
#include <sstream>
#include <vector>

#include "qkgv/errors.hpp"
#include "qkgv/numtheory.hpp"

namespace qkgv {

namespace {

using KR = KElem<Rat>;
using Series = NovSeries<KR>;

const Rat kGw1(2875);

}  // namespace

CohElem CohElem::homogeneous(int degree, const KR& y) {
  CohElem out;
  for (int i = 0; i < 4; ++i)
    if (y[i] != 0) out.terms[degree - i] += KR::basis(i, y[i]);
  return out;
}

KR CohElem::coefficient(int k) const {
  auto it = terms.find(k);
  return it == terms.end() ? KR() : it->second;
}

CohElem& CohElem::operator+=(const CohElem& b) {
  for (const auto& [k, v] : b.terms) {
    KR s = terms[k] + v;
    if (s.is_zero())
      terms.erase(k);
    else
      terms[k] = s;
  }
  return *this;
}

CohElem CohElem::operator*(const Rat& c) const {
  CohElem out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms) out.terms[k] = v * c;
  return out;
}

std::string to_string(const CohElem& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
    for (int i = 0; i < 4; ++i) {
      const Rat& c = it->second[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      if (i > 0) os << "*H^" << i;
      os << "*z^" << it->first;
    }
  }
  return os.str();
}

const KR& i_function_h_normalized(int d) {
  if (d < 0) throw PreconditionError("i_function_h: negative degree");
  static std::mutex mu;
  static std::vector<KR> memo;
  std::lock_guard lock(mu);
  while (static_cast<int>(memo.size()) <= d) {
    const long e = static_cast<long>(memo.size());
    KR num = KR::one();
    for (long m = 1; m <= 5 * e; ++m) num = num * KR(Rat(1), Rat(5) / m, Rat(0), Rat(0));
    KR den = KR::one();
    for (long m = 1; m <= e; ++m) {
      Rat inv_m(1, m);
      KR f(Rat(1), inv_m, Rat(0), Rat(0));
      den = den * f * f * f * f * f;
    }
    Int fd = factorial(5 * e);
    Int de = factorial(e);
    mpz_pow_ui(de.get_mpz_t(), de.get_mpz_t(), 5);
    memo.push_back(num * k_inv(den) * (Rat(fd) / Rat(de)));
  }
  return memo[d];
}

NovSeries<CohElem> i_function_h(int max_degree) {
  NovSeries<CohElem> out(max_degree);
  for (int d = 0; d <= max_degree; ++d) out[d] = CohElem::homogeneous(1, i_function_h_normalized(d));
  return out;
}

namespace {

// Normalized series for given tau, c, truncated at Q^order.
Series assemble(const NovSeries<Rat>& tau, const NovSeries<Rat>& c, int order) {
  NovSeries<Rat> neg_tau = -tau.truncated(order);
  const NovSeries<Rat> e_tau = series_exp(neg_tau);  // exp(-tau)
  Series exp_y(order);  // exp(-tau y)
  {
    Series t(order);
    for (int j = 1; j <= order; ++j) t[j] = KR::basis(1, neg_tau[j]);
    exp_y = series_exp(t);
  }
  Series sum(order);
  NovSeries<Rat> e_pow = NovSeries<Rat>::constant(order, Rat(1));  // exp(-d tau)
  for (int d = 0; d <= order; ++d) {
    const KR& id = i_function_h_normalized(d);
    for (int j = 0; d + j <= order; ++j)
      if (e_pow[j] != 0) sum[d + j] += id * e_pow[j];
    e_pow = e_pow * e_tau;
  }
  Series cs(order);
  for (int j = 0; j <= order; ++j) cs[j] = KR(c[j]);
  return sum * exp_y * cs;
}

}  // namespace

JhReconstruction reconstruct_jh(int max_degree) {
  if (max_degree < 1) throw PreconditionError("reconstruct_jh: max degree must be at least 1");
  NovSeries<Rat> tau(max_degree);
  NovSeries<Rat> c(max_degree);
  c[0] = 1;
  for (int m = 1; m <= max_degree; ++m) {
    // tau_m enters the y^1 part at Q^m as -tau_m, c_m enters the y^0 part as +c_m.
    Series g = assemble(tau, c, m);
    tau[m] = g[m][1];
    g = assemble(tau, c, m);
    c[m] = -g[m][0];
  }
  JhReconstruction out{tau, c, assemble(tau, c, max_degree), NovSeries<CohElem>(max_degree)};
  for (int m = 0; m <= max_degree; ++m) {
    const KR& v = out.normalized[m];
    if (v[0] != (m == 0 ? 1 : 0) || v[1] != 0)
      throw InternalError("reconstruct_jh: normalization conditions fail at Q^" + std::to_string(m));
    out.jh[m] = CohElem::homogeneous(1, v);
  }
  return out;
}

GwTable gw_invariants(int max_degree) {
  const JhReconstruction jh = reconstruct_jh(max_degree);
  GwTable t;
  t.max_degree = max_degree;
  const Rat alpha1 = jh.normalized[1][2];
  if (alpha1 * 5 == kGw1)
    t.convention = GwConvention::kOneFifth;
  else if (alpha1 == kGw1)
    t.convention = GwConvention::kUnscaled;
  else
    throw InternalError("gw_invariants: calibration failed, H^2 readout at Q^1 is " + to_string(alpha1));
  const Rat scale(t.convention == GwConvention::kOneFifth ? 5 : 1);
  for (int d = 1; d <= max_degree; ++d) {
    const Rat alpha = jh.normalized[d][2];
    const Rat beta = jh.normalized[d][3];
    t.gw[d] = alpha * scale / d;
    if (beta * d != alpha * -2)
      throw InternalError("gw_invariants: H^3/H^2 readout ratio is not -2/d at Q^" + std::to_string(d));
  }
  gv_from_gw(t);
  return t;
}

void gv_from_gw(GwTable& table) {
  table.gv.clear();
  for (int d = 1; d <= table.max_degree; ++d) {
    Rat s(0);
    for (long e : divisors(d)) {
      const int mu = mobius(e);
      if (mu == 0) continue;
      s += table.gw.at(static_cast<int>(d / e)) * Rat(mu, e * e * e);
    }
    if (!is_integer(s)) throw InternalError("gv_from_gw: GV_" + std::to_string(d) + " = " + to_string(s) + " is not an integer");
    table.gv[d] = s;
  }
}

Rat gw_from_gv(const GwTable& table, int d) {
  Rat s(0);
  for (long e : divisors(d)) s += table.gv.at(static_cast<int>(d / e)) / Rat(e * e * e);
  return s;
}

Rat gv_power(const GwTable& table, int gamma, const Rat& n) {
  if (!is_integer(n) || n <= 0) return Rat(0);
  const long nn = n.get_num().get_si();
  if (nn > table.max_degree) throw PreconditionError("gv_power: n exceeds the table's max degree");
  Rat s(0);
  for (long d : divisors(nn)) s += rat_pow(Rat(d), gamma) * table.gv.at(static_cast<int>(d));
  return s;
}

}  // namespace qkgv
