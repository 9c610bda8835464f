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
#include <mpfr.h>

#include <string>

namespace trigsum {

/// Owning MPFR float with a per-value precision in bits. Binary operations
/// round to the smaller of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(long bits = 256);
  BigFloat(long value, long bits);
  BigFloat(const mpz_class& value, long bits);
  BigFloat(const mpq_class& value, long bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(long bits);
  static BigFloat from_string(const std::string& decimal, long bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific decimal with the given number of significant digits; 0 picks
  /// enough digits to round-trip the value.
  std::string to_string(int digits = 0) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
  }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat cot(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// x * 2^exp, exact.
BigFloat ldexp(const BigFloat& x, long exp);
/// log2|x|, or -inf for zero.
double log2_abs(const BigFloat& x);

}  // namespace trigsum
