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
#include "trigsum/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "trigsum/error.hpp"

namespace trigsum {
namespace {

mpfr_prec_t checked(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 20)
    throw Error(ErrorCode::kInvalidArgument, "precision out of range: " + std::to_string(bits));
  return static_cast<mpfr_prec_t>(bits);
}

// Re-rounds the left operand to the smaller precision before an in-place op.
void shrink_to(mpfr_ptr x, mpfr_srcptr other) {
  if (mpfr_get_prec(other) < mpfr_get_prec(x)) mpfr_prec_round(x, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(long bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& decimal, long bits) {
  BigFloat r(bits);
  if (mpfr_set_str(r.value_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(ErrorCode::kInvalidArgument, "not a decimal number: " + decimal);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  if (digits <= 0) digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, value_);
  std::unique_ptr<char, void (*)(char*)> owned(raw, [](char* p) { mpfr_free_str(p); });
  return std::string(owned.get());
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  shrink_to(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  shrink_to(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  shrink_to(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  shrink_to(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat tan(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_tan(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cot(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cot(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::min(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long exp) {
  BigFloat r(x);
  mpfr_mul_2si(r.get(), r.get(), exp, MPFR_RNDN);
  return r;
}

double log2_abs(const BigFloat& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, x.get(), MPFR_RNDN);
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

}  // namespace trigsum
