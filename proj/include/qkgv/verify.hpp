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
#include <set>
#include <string>
#include <vector>

#include "qkgv/gwside.hpp"
#include "qkgv/novikov.hpp"
#include "qkgv/qrat.hpp"

namespace qkgv {

/// 5 a(d, r, q) = d(r-1)/(1-q) + d/(1-q)^2, divided by 5.
CycloFrac conjecture_a(int d, int r);
/// 5 b(d, r, q) = (rd + r^2 - d - 1)/(1-q) + (d+3)/(1-q)^2 - 2/(1-q)^3, divided by 5.
CycloFrac conjecture_b(int d, int r);

/// 1 + x^2 sum a(d,r,q^r) GV_d Q^{dr} + x^3 sum b(d,r,q^r) GV_d Q^{dr}, modulo Q^{D+1}.
NovSeries<KQRat> conjecture_rhs(int max_degree, const GwTable& table);

/// 1 + x^2/5 sum d GW_d Q^d/(1-q)^2 + x^3/5 sum ((3+d) GW_d/(1-q)^2 - 2 GW_d/(1-q)^3) Q^d.
NovSeries<KQRat> fake_j(int max_degree, const GwTable& table);

/// Pole coefficients of the Q^M coefficient at the primitive r-th roots of unity,
/// each scaled by 5: a from x^1; b, c from x^2; d, e, f from x^3, by increasing pole order.
struct CoeffRecord {
  int M = 0;
  int r = 0;
  Rat a, b, c, d, e, f;

  friend bool operator==(const CoeffRecord&, const CoeffRecord&) = default;
};

/// Throws InternalError if a coefficient is not rational (it would then depend on
/// the choice of primitive root).
CoeffRecord extract_coefficients(const NovSeries<KQRat>& jk_small, int M, int r);

/// The closed formulas in terms of GV power sums; all zero when r does not divide M.
CoeffRecord predicted_coefficients(const GwTable& table, int M, int r);

struct Verdict {
  std::string check;
  int M = -1;
  int r = -1;          // -1 when not applicable
  int component = -1;  // -1 when not applicable
  bool pass = true;
  std::string expected;  // filled on failure
  std::string actual;    // filled on failure
};

struct VerifyReport {
  int max_degree = 0;
  std::vector<Verdict> identity;
  std::vector<Verdict> coefficients;
  std::vector<Verdict> structure;
  std::map<std::string, double> seconds;

  bool all_pass() const;
  size_t failures() const;
};

inline const std::set<std::string>& all_check_groups() {
  static const std::set<std::string> groups{"coeffs", "identity", "structure"};
  return groups;
}

void check_identity(const NovSeries<KQRat>& jk_small, const GwTable& table, VerifyReport& report);
void check_coefficient_theorems(const NovSeries<KQRat>& jk_small, const GwTable& table, VerifyReport& report);
void check_structure(const NovSeries<KQRat>& jk_small, VerifyReport& report);

/// Run the requested groups on precomputed inputs; jk_small and table must reach D.
VerifyReport run_checks(int max_degree, const NovSeries<KQRat>& jk_small, const GwTable& table,
                        const std::set<std::string>& groups = all_check_groups());

}  // namespace qkgv
