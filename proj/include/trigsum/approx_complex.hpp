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

#include "trigsum/big_float.hpp"

namespace trigsum {

/// Complex number with arbitrary-precision parts. Arithmetic results carry
/// the minimum precision of the operands.
class ApproxComplex {
 public:
  explicit ApproxComplex(long bits = 256) : re_(bits), im_(bits) {}
  ApproxComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  ApproxComplex(const mpq_class& re, long bits) : re_(re, bits), im_(bits) {}

  /// e^{2 pi i t} for t given in turns.
  static ApproxComplex unit(const mpq_class& t, long bits);
  static ApproxComplex i(long bits) { return {BigFloat(bits), BigFloat(1, bits)}; }

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  long precision_bits() const;

  ApproxComplex conj() const { return {re_, -im_}; }
  BigFloat abs() const { return hypot(re_, im_); }

  /// |z| < 2^{-precision/2}.
  bool is_numerically_zero() const;

  ApproxComplex operator-() const { return {-re_, -im_}; }
  ApproxComplex& operator+=(const ApproxComplex& rhs);
  ApproxComplex& operator-=(const ApproxComplex& rhs);
  ApproxComplex& operator*=(const ApproxComplex& rhs);
  ApproxComplex& operator/=(const ApproxComplex& rhs);

  friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
  friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
  friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
  friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }

  /// "re + im i" with the given number of significant digits per part.
  std::string to_string(int digits = 0) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

ApproxComplex inverse(const ApproxComplex& z);

}  // namespace trigsum
