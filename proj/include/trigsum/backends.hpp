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

#include <string>

#include "trigsum/approx_complex.hpp"
#include "trigsum/cyclotomic.hpp"

namespace trigsum {

// Both backends expose the same surface so that transforms and identities
// can be written once as templates. Angles are passed in turns (fractions
// of 2 pi) as exact rationals. Trigonometric functions whose values are
// imaginary-unit multiples of elements of Q(w) come pre-multiplied by i:
// i_sin(t) = i sin(2 pi t), i_tan, i_cot, i_csc likewise; cos, sec, sin_sq
// and cos_sq are returned as is.

/// Exact arithmetic in Q(w_L) for a fixed field order L.
class ExactBackend {
 public:
  using Scalar = CycloNumber;

  explicit ExactBackend(long order);

  long order() const { return order_; }
  std::string name() const { return "exact"; }

  Scalar zero() const { return CycloNumber(order_); }
  Scalar one() const { return CycloNumber::rational(order_, 1); }
  Scalar rational(const mpq_class& q) const { return CycloNumber::rational(order_, q); }

  /// e^{2 pi i t}; the denominator of t must divide the field order.
  Scalar unit_root(const mpq_class& t) const;
  Scalar cos(const mpq_class& t) const;
  Scalar sec(const mpq_class& t) const;
  Scalar i_sin(const mpq_class& t) const;
  Scalar i_csc(const mpq_class& t) const;
  Scalar i_tan(const mpq_class& t) const;
  Scalar i_cot(const mpq_class& t) const;
  Scalar sin_sq(const mpq_class& t) const;
  Scalar cos_sq(const mpq_class& t) const;
  /// i sqrt(k) for squarefree k = 3 mod 4, realized as the Gauss sum of the
  /// real primitive odd character mod k; k must divide the field order.
  Scalar i_sqrt(long k) const;

  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  Scalar inverse(const Scalar& a) const { return trigsum::inverse(a); }

 private:
  // (w^m + sign)^{-1}, memoized across calls.
  Scalar shifted_root_inverse(long m, int sign) const;
  long exponent_of(const mpq_class& t) const;

  long order_;
};

/// MPFR complex arithmetic at a fixed working precision.
class FloatBackend {
 public:
  using Scalar = ApproxComplex;

  explicit FloatBackend(long precision_bits = 256);

  long precision_bits() const { return bits_; }
  std::string name() const { return "float/" + std::to_string(bits_); }

  Scalar zero() const { return ApproxComplex(bits_); }
  Scalar one() const { return ApproxComplex(mpq_class(1), bits_); }
  Scalar rational(const mpq_class& q) const { return ApproxComplex(q, bits_); }

  Scalar unit_root(const mpq_class& t) const { return ApproxComplex::unit(t, bits_); }
  Scalar cos(const mpq_class& t) const;
  Scalar sec(const mpq_class& t) const;
  Scalar i_sin(const mpq_class& t) const;
  Scalar i_csc(const mpq_class& t) const;
  Scalar i_tan(const mpq_class& t) const;
  Scalar i_cot(const mpq_class& t) const;
  Scalar sin_sq(const mpq_class& t) const;
  Scalar cos_sq(const mpq_class& t) const;
  Scalar i_sqrt(long k) const;

  /// |a - b| < 2^{-precision/2}.
  bool equal(const Scalar& a, const Scalar& b) const { return (a - b).is_numerically_zero(); }
  Scalar inverse(const Scalar& a) const { return trigsum::inverse(a); }

 private:
  BigFloat angle(const mpq_class& t) const;
  Scalar real(BigFloat x) const { return {std::move(x), BigFloat(bits_)}; }
  Scalar imaginary(BigFloat y) const { return {BigFloat(bits_), std::move(y)}; }

  long bits_;
};

template <class Backend>
typename Backend::Scalar integer_power(const Backend& backend, typename Backend::Scalar base,
                                       unsigned long exponent) {
  auto result = backend.one();
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace trigsum
