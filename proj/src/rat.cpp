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

#include "qkgv/rat.hpp"

#include <stdexcept>

#include "qkgv/errors.hpp"

namespace qkgv {

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int parse_int(std::string_view s) {
  Int out;
  if (s.empty() || out.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return out;
}

Rat parse_rat(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Rat rat_pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("rat_pow: zero to a negative power");
    return rat_pow(Rat(1) / base, -exponent);
  }
  Rat out(1);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out = Rat(num, den);
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int factorial(long n) {
  if (n < 0) throw PreconditionError("factorial of a negative number");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace qkgv
