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

#include "qkgv/qkside.hpp"

#include <mutex>
#include <string>

#include "qkgv/errors.hpp"
#include "qkgv/numtheory.hpp"

namespace qkgv {

namespace {

using KPoly = KElem<Poly>;

const Poly kOne(Rat(1));

Poly q_power(int k) { return Poly::monomial(Rat(1), k); }

KCyclo to_cyclo(const KPoly& p, const std::map<int, int>& mult = {}) {
  return kmap<CycloFrac>(p, [&mult](const Poly& c) { return CycloFrac(c, mult); });
}

KCyclo& reduce(KCyclo& a) {
  for (auto& c : a.c) c.reduce();
  return a;
}

KCyclo scaled(const KPoly& p, const CycloFrac& f) {
  return kmap<CycloFrac>(p, [&f](const Poly& c) { return f * c; });
}

// 1 - q^e P^k in the x basis.
KPoly one_minus_pk_qe(int k, int e) {
  const KElem<Rat> pk = p_power<Rat>(k);
  const Poly m = q_power(e);
  KPoly out;
  for (int i = 0; i < 4; ++i) out.c[i] = m * -pk[i];
  out.c[0] += kOne;
  return out;
}

KPoly compute_i_numerator(int d) {
  // (1 - q) prod_{k<=5d} (1 - P^5 q^k) times prod_{k<=d} sum_j C(j+4,4) (-q^k)^j x^j (1-q^k)^{3-j}
  KPoly out(kOne - q_power(1), Poly(), Poly(), Poly());
  for (int k = 1; k <= 5 * d; ++k) out *= one_minus_pk_qe(5, k);
  for (int k = 1; k <= d; ++k) {
    const Poly qk = q_power(k);
    const Poly base = kOne - qk;
    KPoly f;
    Poly sign_qk(Rat(1));
    for (int j = 0; j < 4; ++j) {
      f.c[j] = sign_qk * pow(base, 3 - j) * Rat(binomial(j + 4, 4));
      sign_qk *= -qk;
    }
    out *= f;
  }
  return out;
}

}  // namespace

const KCyclo& i_function_k_term(int d) {
  if (d < 0) throw PreconditionError("i_function_k: negative degree");
  static std::mutex mu;
  static std::vector<KCyclo> memo;
  std::lock_guard lock(mu);
  while (static_cast<int>(memo.size()) <= d) {
    const int e = static_cast<int>(memo.size());
    // denominator prod_{k<=e} (1 - q^k)^8 = prod_{k<=e} prod_{s|k} Phi_s^8
    std::map<int, int> mult;
    for (int k = 1; k <= e; ++k)
      for (long s : divisors(k)) mult[static_cast<int>(s)] += 8;
    KCyclo term = to_cyclo(compute_i_numerator(e), mult);
    memo.push_back(reduce(term));
  }
  return memo[d];
}

NovSeries<KQRat> i_function_k(int max_degree) {
  if (max_degree < 0) throw PreconditionError("i_function_k: negative max degree");
  NovSeries<KQRat> out(max_degree);
  for (int d = 0; d <= max_degree; ++d) out[d] = to_kqrat(i_function_k_term(d));
  return out;
}

namespace {

class Reconstructor {
 public:
  Reconstructor(int max_degree, const ReconState* from) : d_max_(max_degree) {
    st_.max_degree = max_degree;
    for (int i = 0; i < 4; ++i) {
      st_.epsilon[i] = NovSeries<Rat>(max_degree);
      st_.rpoly[i].assign(max_degree + 1, Poly());
      st_.fpoly[i].assign(max_degree + 1, Poly());
    }
    st_.rpoly[0][0] = kOne;
    st_.jk = NovSeries<KQRat>(max_degree);
    st_.jk[0] = KQRat(QRat(kOne - q_power(1)));
    if (from) adopt(*from);
    x_.resize(max_degree + 1);
    e_.resize(max_degree + 1);
  }

  ReconState run() {
    for (int m = solved_ + 1; m <= d_max_; ++m) solve_level(m);
    st_.levels_computed = d_max_ - first_solved_;
    return st_;
  }

 private:
  void adopt(const ReconState& from) {
    const int n = std::min(from.max_degree, d_max_);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= n; ++j) {
        st_.epsilon[i][j] = from.epsilon[i][j];
        st_.rpoly[i][j] = from.rpoly[i][j];
        st_.fpoly[i][j] = from.fpoly[i][j];
      }
    for (int j = 0; j <= n; ++j) st_.jk[j] = from.jk[j];
    solved_ = first_solved_ = n;
  }

  // Q^n coefficient of sum_k sum_i Psi^k(eps_i) (1 - P^k q^{kd})^i / (k (1 - q^k)).
  KCyclo exponent(int d, int n) const {
    KCyclo out;
    for (long kk : divisors(n)) {
      const int k = static_cast<int>(kk);
      const int j = n / k;
      const KPoly base = one_minus_pk_qe(k, k * d);
      KPoly acc;
      KPoly pw = KPoly::one();
      for (int i = 0; i < 4; ++i) {
        if (st_.epsilon[i][j] != 0) acc += pw * Poly(st_.epsilon[i][j]);
        if (i < 3) pw *= base;
      }
      if (acc.is_zero()) continue;
      out += scaled(acc, CycloFrac::inverse_one_minus_qk(k, 1, Rat(1, k)));
    }
    return out;
  }

  // E_d[n] with E_d = exp(X_d), via n E[n] = sum_{m=1}^n m X[m] E[n-m].
  const KCyclo& exp_factor(int d, int n) {
    auto& x = x_[d];
    auto& e = e_[d];
    if (e.empty()) {
      x.push_back(KCyclo());
      e.push_back(KCyclo::one());
    }
    while (static_cast<int>(e.size()) <= n) {
      const int k = static_cast<int>(e.size());
      x.push_back(exponent(d, k));
      KCyclo acc;
      for (int m = 1; m <= k; ++m) {
        if (x[m].is_zero() || e[k - m].is_zero()) continue;
        acc += (x[m] * e[k - m]) * CycloFrac(Rat(m));
      }
      acc *= CycloFrac(Rat(1, k));
      e.push_back(reduce(acc));
    }
    return e[n];
  }

  void forget_exp(int d, int n) {
    if (static_cast<int>(e_[d].size()) > n) {
      e_[d].resize(n);
      x_[d].resize(n);
    }
  }

  // R_d[j] = sum_i r_{ij}(q) (1 - P q^d)^i
  KPoly r_factor(int d, int j) const {
    const KPoly base = one_minus_pk_qe(1, d);
    KPoly out;
    KPoly pw = KPoly::one();
    for (int i = 0; i < 4; ++i) {
      if (!st_.rpoly[i][j].is_zero()) out += pw * st_.rpoly[i][j];
      if (i < 3) pw *= base;
    }
    return out;
  }

  // I_d [E_d R_d]_{Q^{m-d}}
  KCyclo term(int d, int m) {
    KCyclo er;
    for (int j = 0; j <= m - d; ++j) {
      const KPoly r = r_factor(d, m - d - j);
      if (r.is_zero()) continue;
      const KCyclo& e = exp_factor(d, j);
      if (e.is_zero()) continue;
      er += e * to_cyclo(r);
    }
    if (er.is_zero()) return er;
    return i_function_k_term(d) * reduce(er);
  }

  void solve_level(int m) {
    KCyclo rest;
    for (int d = 1; d <= m; ++d) rest += term(d, m);
    const KCyclo provisional = rest + term(0, m);
    const std::string where = " at Q^" + std::to_string(m);
    for (int i = 0; i < 4; ++i) {
      const Poly f = provisional[i].polynomial_part();
      const Rat f1 = f.eval(Rat(1));
      const Poly diff = Poly(f1) - f;
      if (!divides(kOne - q_power(1), diff))
        throw InternalError("reconstruct_jk: (1 - q) does not divide f_" + std::to_string(i) + " - f_" +
                            std::to_string(i) + "(1)" + where);
      st_.fpoly[i][m] = f;
      st_.epsilon[i][m] = -f1;
      st_.rpoly[i][m] = exact_div(diff, kOne - q_power(1));
    }
    if (st_.epsilon[0][m] != 0) throw InternalError("reconstruct_jk: eps_0 does not vanish" + where);
    forget_exp(0, m);
    KCyclo full = rest + term(0, m);
    reduce(full);
    for (int i = 0; i < 4; ++i)
      if (!full[i].polynomial_part().is_zero())
        throw InternalError("reconstruct_jk: completed coefficient has a nonzero K_+ part" + where);
    st_.jk[m] = to_kqrat(full);
    solved_ = m;
  }

  int d_max_;
  int solved_ = 0;
  int first_solved_ = 0;
  ReconState st_;
  std::vector<std::vector<KCyclo>> x_, e_;
};

}  // namespace

ReconState reconstruct_jk(int max_degree) {
  if (max_degree < 1) throw PreconditionError("reconstruct_jk: max degree must be at least 1");
  return Reconstructor(max_degree, nullptr).run();
}

ReconState reconstruct_jk(int max_degree, const ReconState& from) {
  if (max_degree < 1) throw PreconditionError("reconstruct_jk: max degree must be at least 1");
  return Reconstructor(max_degree, &from).run();
}

NovSeries<KQRat> jk_small(const ReconState& state) {
  NovSeries<KQRat> out(state.max_degree);
  const QRat inv = QRat::inverse_one_minus_qk(1, 1);
  for (int m = 0; m <= state.max_degree; ++m) out[m] = state.jk[m] * inv;
  return out;
}

}  // namespace qkgv
