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

#include <memory>
#include <string>
#include <vector>

#include "trigsum/approx_complex.hpp"

namespace trigsum {

/// Coefficients of the k-th cyclotomic polynomial, ascending degree.
std::vector<mpz_class> cyclotomic_polynomial(long k);

namespace detail {
struct CycloField;
}

/// Element of Q(w), w = e^{2 pi i/k}, kept as a polynomial in w of degree
/// below phi(k) reduced modulo the k-th cyclotomic polynomial. Coefficients
/// are rationals in lowest terms, so equality is coefficient equality.
class CycloNumber {
 public:
  /// Zero of Q(w_k).
  explicit CycloNumber(long modulus = 1);
  /// Any polynomial in w; reduced on construction.
  CycloNumber(long modulus, const std::vector<mpq_class>& poly);

  static CycloNumber rational(long modulus, const mpq_class& value);

  long modulus() const;
  /// phi(k), the number of stored coefficients.
  long degree() const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  /// Complex conjugation, w -> w^{-1}.
  CycloNumber conj() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& rhs);
  CycloNumber& operator-=(const CycloNumber& rhs);
  CycloNumber& operator*=(const CycloNumber& rhs);
  CycloNumber& operator*=(const mpq_class& rhs);
  CycloNumber& operator/=(const CycloNumber& rhs);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const mpq_class& b) { return a *= b; }
  friend CycloNumber operator*(const mpq_class& b, CycloNumber a) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  /// e.g. "1/2 - w + 3*w^4"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_field(const CycloNumber& other) const;

  std::shared_ptr<const detail::CycloField> field_;
  std::vector<mpq_class> coeffs_;
};

/// Multiplicative inverse via the extended Euclidean algorithm over Q.
CycloNumber inverse(const CycloNumber& a);
CycloNumber pow(CycloNumber base, unsigned long exponent);

/// w^(j mod k) in reduced form.
CycloNumber root_of_unity_power(long k, long j);

/// Value at w = e^{2 pi i/k}, evaluated with the given working precision.
ApproxComplex embed_complex(const CycloNumber& a, long precision_bits);

}  // namespace trigsum
