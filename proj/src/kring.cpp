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

#include "qkgv/kring.hpp"

#include <sstream>

namespace qkgv {

const PairingMatrix& pairing_matrix() {
  static const PairingMatrix m = {{
      {Rat(0), Rat(5), Rat(-5), Rat(5)},
      {Rat(5), Rat(-5), Rat(5), Rat(0)},
      {Rat(-5), Rat(5), Rat(0), Rat(0)},
      {Rat(5), Rat(0), Rat(0), Rat(0)},
  }};
  return m;
}

Rat k_pairing(const KElem<Rat>& a, const KElem<Rat>& b) {
  const auto& m = pairing_matrix();
  Rat out(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out += a.c[i] * b.c[j] * m[i][j];
  return out;
}

std::array<KElem<Rat>, 4> dual_basis() {
  const Rat fifth(1, 5);
  return {{
      KElem<Rat>(Rat(0), Rat(0), Rat(0), fifth),
      KElem<Rat>(Rat(0), Rat(0), fifth, fifth),
      KElem<Rat>(Rat(0), fifth, fifth, Rat(0)),
      KElem<Rat>(fifth, fifth, Rat(0), -fifth),
  }};
}

std::string to_string(const KElem<Rat>& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << to_string(a.c[i]);
  os << "]";
  return os.str();
}

}  // namespace qkgv
