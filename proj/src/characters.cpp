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
#include "trigsum/characters.hpp"

#include <numeric>
#include <string>

namespace trigsum {
namespace {

// One cyclic factor of (Z/k)^*: residues mod q, logs to a fixed generator.
struct CyclicComponent {
  long q = 1;
  long order = 1;
  std::vector<long> log;  // log[r] for units r mod q, -1 otherwise
};

CyclicComponent cyclic_from_generator(long q, long generator, long order) {
  CyclicComponent c{q, order, std::vector<long>(q, -1)};
  long x = 1 % q;
  for (long i = 0; i < order; ++i) {
    c.log[x] = i;
    x = x * generator % q;
  }
  return c;
}

std::vector<CyclicComponent> unit_group_components(long k) {
  std::vector<CyclicComponent> out;
  for (auto [p, e] : factorize(k)) {
    long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (p != 2) {
      out.push_back(cyclic_from_generator(q, primitive_root_prime_power(p, e), q / p * (p - 1)));
      continue;
    }
    if (e == 1) continue;
    // The -1 factor: log is 1 exactly on residues 3 mod 4.
    CyclicComponent minus{q, 2, std::vector<long>(q, -1)};
    for (long r = 1; r < q; r += 2) minus.log[r] = r % 4 == 3 ? 1 : 0;
    out.push_back(minus);
    if (e >= 3) {
      // The 5 factor, read off u * (-1)^{[u = 3 mod 4]} = 5^j.
      const long order = q / 4;
      CyclicComponent five = cyclic_from_generator(q, 5, order);
      for (long r = 1; r < q; r += 2)
        if (r % 4 == 3) five.log[r] = five.log[q - r];
      out.push_back(five);
    }
  }
  return out;
}

}  // namespace

Character::Character(long modulus, long order, std::vector<long> exponents)
    : order_(order), exponents_(std::move(exponents)) {
  if (modulus < 1 || static_cast<long>(exponents_.size()) != modulus || order < 1)
    throw Error(ErrorCode::kInvalidArgument, "malformed character table");
  for (long n = 0; n < modulus; ++n) {
    const bool unit = std::gcd(n, modulus) == 1;
    const long e = exponents_[n];
    if (unit != (e >= 0) || e >= order)
      throw Error(ErrorCode::kInvalidArgument,
                  "character value at " + std::to_string(n) + " is inconsistent with gcd(n, k)");
  }
  flags_ = classify(*this);
}

int Character::real_value(long n) const {
  if (!is_real()) throw Error(ErrorCode::kInvalidArgument, "character is not real");
  const long e = exponent(n);
  if (e < 0) return 0;
  return e == 0 ? 1 : -1;
}

CharacterFlags classify(const Character& chi) {
  const long k = chi.modulus();
  CharacterFlags f;
  f.is_real = chi.order() <= 2;
  f.is_principal = chi.order() == 1;
  const long minus_one = chi.exponent(k - 1);
  f.is_even = minus_one == 0;
  f.is_odd = chi.order() % 2 == 0 && minus_one == chi.order() / 2;
  f.conductor = k;
  for (long d : divisors(k)) {
    bool induced = true;
    for (long n = 1; n < k && induced; n += d)
      if (std::gcd(n, k) == 1 && chi.exponent(n) != 0) induced = false;
    if (induced) {
      f.conductor = d;
      break;
    }
  }
  f.is_primitive = f.conductor == k;
  return f;
}

std::vector<Character> enumerate_characters(long k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
  const auto components = unit_group_components(k);
  long exponent = 1;
  for (const auto& c : components) exponent = std::lcm(exponent, c.order);

  std::vector<Character> out;
  std::vector<long> choice(components.size(), 0);
  while (true) {
    std::vector<long> table(k, -1);
    long g = exponent;
    for (long n = 0; n < k; ++n) {
      if (std::gcd(n, k) != 1) continue;
      long e = 0;
      for (size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        e += choice[i] * c.log[n % c.q] * (exponent / c.order);
      }
      table[n] = e % exponent;
      g = std::gcd(g, table[n]);
    }
    const long order = exponent / g;
    for (auto& e : table)
      if (e >= 0) e /= g;
    out.emplace_back(k, order, std::move(table));

    // Odometer over the component exponents, last component fastest.
    size_t i = components.size();
    while (i > 0 && ++choice[i - 1] == components[i - 1].order) choice[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

int jacobi_symbol(long n, long k) {
  if (k < 1 || k % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument, "jacobi symbol needs an odd positive modulus");
  n = mod(n, k);
  int result = 1;
  while (n != 0) {
    while (n % 2 == 0) {
      n /= 2;
      if (k % 8 == 3 || k % 8 == 5) result = -result;
    }
    std::swap(n, k);
    if (n % 4 == 3 && k % 4 == 3) result = -result;
    n %= k;
  }
  return k == 1 ? result : 0;
}

bool has_real_primitive_odd_character(long k) {
  return k >= 3 && k % 4 == 3 && is_squarefree(k);
}

Character kronecker_character(long k) {
  if (k < 7 || !has_real_primitive_odd_character(k))
    throw Error(ErrorCode::kNotApplicable,
                "no real primitive odd character constructed for k = " + std::to_string(k) +
                    " (needs squarefree k = 3 mod 4, k >= 7)");
  std::vector<long> table(k);
  for (long n = 0; n < k; ++n) {
    const int s = jacobi_symbol(n, k);
    table[n] = s == 0 ? -1 : (s == 1 ? 0 : 1);
  }
  return Character(k, 2, std::move(table));
}

ClassNumberResult class_number(long k) {
  if (k < 7 || !has_real_primitive_odd_character(k))
    throw Error(ErrorCode::kNotApplicable,
                "class number formula not applicable: k must be squarefree, k = 3 mod 4, k >= 7");
  const Character chi = kronecker_character(k);
  ClassNumberResult r;
  r.k = k;
  mpz_class weighted = 0;
  for (long j = 1; j < k; ++j) weighted += j * chi.real_value(j);
  r.via_weighted_sum = mpq_class(-weighted, k);
  r.via_weighted_sum.canonicalize();
  long half = 0;
  for (long j = 1; j <= (k - 1) / 2; ++j) half += chi.real_value(j);
  r.via_half_sum = mpq_class(half, 2 - chi.real_value(2));
  r.via_half_sum.canonicalize();
  if (r.via_weighted_sum != r.via_half_sum || r.via_weighted_sum.get_den() != 1 ||
      r.via_weighted_sum <= 0)
    throw std::logic_error("class number formulas disagree for k = " + std::to_string(k));
  r.h = r.via_weighted_sum.get_num().get_si();
  return r;
}

}  // namespace trigsum
