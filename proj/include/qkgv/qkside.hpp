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

#include <array>
#include <vector>

#include "qkgv/kring.hpp"
#include "qkgv/novikov.hpp"
#include "qkgv/poly.hpp"
#include "qkgv/qrat.hpp"

namespace qkgv {

using KCyclo = KElem<CycloFrac>;

/// I^K_d = (1 - q) prod_{k<=5d}(1 - P^5 q^k) / prod_{k<=d}(1 - P q^k)^5, reduced. Memoized.
const KCyclo& i_function_k_term(int d);

NovSeries<KQRat> i_function_k(int max_degree);

/// Reconstruction unknowns and the assembled J^K(0) modulo Q^{D+1}.
struct ReconState {
  int max_degree = 0;
  /// epsilon[i][j] = eps_{ij}; the constant terms vanish.
  std::array<NovSeries<Rat>, 4> epsilon;
  /// rpoly[i][j] = r_{ij}(q)
  std::array<std::vector<Poly>, 4> rpoly;
  /// fpoly[i][M] = f_i(q), the K_+ part of the x^i component at level M with the
  /// level-M unknowns set to zero. fpoly[i][0] is unused.
  std::array<std::vector<Poly>, 4> fpoly;
  /// J^K(0), reduced per Novikov degree.
  NovSeries<KQRat> jk;
  /// Number of Novikov levels solved by the call that produced this state.
  int levels_computed = 0;
};

/// Solve for eps_{iM}, r_{iM}(q) for M = 1..D. Throws InternalError if a
/// structural assertion fails at some level.
ReconState reconstruct_jk(int max_degree);
/// Continue a reconstruction to a higher order, reusing the solved levels of `from`.
ReconState reconstruct_jk(int max_degree, const ReconState& from);

/// (1/(1-q)) J^K(0)
NovSeries<KQRat> jk_small(const ReconState& state);

}  // namespace qkgv
