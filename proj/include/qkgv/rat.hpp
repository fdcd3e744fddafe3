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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qkgv {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Inverse of to_string; accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rat parse_rat(std::string_view s);
Int parse_int(std::string_view s);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

Rat rat_pow(const Rat& base, int exponent);

Int binomial(long n, long k);
Int factorial(long n);

}  // namespace qkgv
