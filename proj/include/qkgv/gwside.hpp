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

#include <map>
#include <string>

#include "qkgv/kring.hpp"
#include "qkgv/novikov.hpp"
#include "qkgv/rat.hpp"

namespace qkgv {

/// Laurent polynomial in z with coefficients in Q[H]/(H^4), keyed by the power of z.
struct CohElem {
  std::map<int, KElem<Rat>> terms;

  /// sum_i y[i] H^i z^{degree - i}
  static CohElem homogeneous(int degree, const KElem<Rat>& y);
  /// Coefficient of z^k.
  KElem<Rat> coefficient(int k) const;

  CohElem& operator+=(const CohElem& b);
  friend CohElem operator+(CohElem a, const CohElem& b) { return a += b; }
  CohElem operator*(const Rat& c) const;
  friend bool operator==(const CohElem& a, const CohElem& b) { return a.terms == b.terms; }
};

inline bool is_zero(const CohElem& a) { return a.terms.empty(); }
std::string to_string(const CohElem& a);

/// I^H_d / z = F_d (1 + a_d y + b_d y^2 + c_d y^3) with y = H/z, as the vector
/// (F_d, F_d a_d, F_d b_d, F_d c_d). Memoized.
const KElem<Rat>& i_function_h_normalized(int d);

/// Coefficients I^H_d = z prod_{m<=5d}(5H + mz) / prod_{m<=d}(H + mz)^5 for d <= D.
NovSeries<CohElem> i_function_h(int max_degree);

struct JhReconstruction {
  NovSeries<Rat> tau;
  NovSeries<Rat> c;
  /// (1/z) sum_d I^H_d Q^d exp(-(dz + H) tau / z) c, in the variable y = H/z.
  /// Its y^0 part is 1 and its y^1 part vanishes.
  NovSeries<KElem<Rat>> normalized;
  /// z times the normalized series, as Laurent data in z.
  NovSeries<CohElem> jh;
};

JhReconstruction reconstruct_jh(int max_degree);

/// Which normalization of the H^2 readout reproduced GW_1 = 2875.
enum class GwConvention { kOneFifth, kUnscaled };

struct GwTable {
  int max_degree = 0;
  GwConvention convention = GwConvention::kOneFifth;
  std::map<int, Rat> gw;
  std::map<int, Rat> gv;
};

/// GW_d for d <= D read from the y^2 part of the normalized J^H, calibrated on
/// GW_1 = 2875 and cross-checked against the y^3 part. Fills gv as well.
GwTable gw_invariants(int max_degree);

/// GV_d = sum_{e | d} mu(e) e^{-3} GW_{d/e}. Throws InternalError on a
/// non-integral result.
void gv_from_gw(GwTable& table);

/// GW_d = sum_{e | d} e^{-3} GV_{d/e}.
Rat gw_from_gv(const GwTable& table, int d);

/// sum_{d | n} d^gamma GV_d; zero when n is not a positive integer.
Rat gv_power(const GwTable& table, int gamma, const Rat& n);

}  // namespace qkgv
