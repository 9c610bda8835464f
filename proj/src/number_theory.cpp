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
#include "trigsum/number_theory.hpp"

#include <numeric>

#include "trigsum/error.hpp"

namespace trigsum {

long lcm(long a, long b) { return std::lcm(a, b); }

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_squarefree(long n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

long power_mod(long base, long exp, long m) {
  long long result = 1 % m;
  long long b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

long primitive_root_prime_power(long p, int e) {
  long pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  const long order = pe / p * (p - 1);
  const auto prime_factors = factorize(order);
  for (long g = 2; g < pe; ++g) {
    if (g % p == 0) continue;
    bool generator = true;
    for (auto [q, unused] : prime_factors) {
      if (power_mod(g, order / q, pe) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return 1;  // pe == 2
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpq_class turns(long p, long q) {
  mpq_class t(p, q);
  t.canonicalize();
  return t;
}

}  // namespace trigsum
