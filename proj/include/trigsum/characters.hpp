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

#include <vector>

#include "trigsum/error.hpp"
#include "trigsum/number_theory.hpp"

namespace trigsum {

struct CharacterFlags {
  bool is_real = false;
  bool is_odd = false;
  bool is_even = false;
  bool is_principal = false;
  bool is_primitive = false;
  long conductor = 1;
};

/// A Dirichlet character mod k as a full value table. Each value is stored as
/// an exponent e of a primitive m-th root of unity (m = order), so chi(n) =
/// e^{2 pi i e/m}; non-units carry exponent -1 and value 0.
class Character {
 public:
  Character(long modulus, long order, std::vector<long> exponents);

  long modulus() const { return static_cast<long>(exponents_.size()); }
  long order() const { return order_; }
  const std::vector<long>& exponents() const { return exponents_; }
  long exponent(long n) const { return exponents_[mod(n, modulus())]; }
  const CharacterFlags& flags() const { return flags_; }

  bool is_real() const { return flags_.is_real; }
  bool is_odd() const { return flags_.is_odd; }
  bool is_even() const { return flags_.is_even; }
  bool is_principal() const { return flags_.is_principal; }
  bool is_primitive() const { return flags_.is_primitive; }
  long conductor() const { return flags_.conductor; }

  /// chi(n) in {-1, 0, 1}; only for real characters.
  int real_value(long n) const;

  /// chi(n) in a backend; an exact backend's order must be a multiple of
  /// the character order.
  template <class Backend>
  typename Backend::Scalar value(const Backend& b, long n) const {
    const long e = exponent(n);
    if (e < 0) return b.zero();
    return b.unit_root(turns(e, order_));
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.order_ == b.order_ && a.exponents_ == b.exponents_;
  }

 private:
  long order_;
  std::vector<long> exponents_;
  CharacterFlags flags_;
};

CharacterFlags classify(const Character& chi);

/// All phi(k) characters mod k, principal first, built from generators of
/// the unit group of each prime-power factor.
std::vector<Character> enumerate_characters(long k);

/// Jacobi symbol (n | k) for odd positive k.
int jacobi_symbol(long n, long k);

/// True when a real primitive odd character with odd modulus k exists, i.e.
/// k is squarefree and k = 3 mod 4.
bool has_real_primitive_odd_character(long k);

/// n -> (n | k), the real primitive odd character mod k, for squarefree
/// k = 3 mod 4 with k >= 7.
Character kronecker_character(long k);

/// G(n, chi) = sum_j chi(j) w^{jn}.
template <class Backend>
typename Backend::Scalar gauss_sum(long n, const Character& chi, const Backend& b) {
  const long k = chi.modulus();
  auto acc = b.zero();
  for (long j = 0; j < k; ++j) {
    const long e = chi.exponent(j);
    if (e < 0) continue;
    acc += b.unit_root(turns(e, chi.order()) + turns(mod(j * n, k), k));
  }
  return acc;
}

struct ClassNumberResult {
  long k = 0;
  long h = 0;
  mpq_class via_weighted_sum;  // -(1/k) sum j chi(j)
  mpq_class via_half_sum;      // (2 - chi(2))^{-1} sum_{j <= (k-1)/2} chi(j)
};

/// h(-k) for squarefree k = 3 mod 4, k >= 7, by both character-sum formulas.
ClassNumberResult class_number(long k);

}  // namespace trigsum
