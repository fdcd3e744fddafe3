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

#include <utility>
#include <vector>

namespace qkgv {

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
std::vector<std::pair<long, int>> factorize(long n);

/// Möbius function. n must be positive.
int mobius(long n);

long euler_phi(long n);

/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

}  // namespace qkgv
