// Copyright 2026 The trigsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace trigsum {

/// Least nonnegative residue of n modulo m (m > 0).
inline long mod(long n, long m) {
  long r = n % m;
  return r < 0 ? r + m : r;
}

long lcm(long a, long b);
long euler_phi(long n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<long, int>> factorize(long n);

std::vector<long> divisors(long n);
bool is_squarefree(long n);
long power_mod(long base, long exp, long m);

/// Smallest primitive root modulo p^e for an odd prime p.
long primitive_root_prime_power(long p, int e);

mpz_class binomial(unsigned long n, unsigned long k);

/// Turns (fractions of a full circle) as exact rationals: p/q.
mpq_class turns(long p, long q);

}  // namespace trigsum
