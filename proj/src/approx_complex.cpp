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
#include "trigsum/approx_complex.hpp"

#include <algorithm>

#include "trigsum/error.hpp"

namespace trigsum {

ApproxComplex ApproxComplex::unit(const mpq_class& t, long bits) {
  // Reduce the turn exactly before converting to an angle.
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  const mpq_class r = t - whole;
  const BigFloat angle = ldexp(BigFloat::pi(bits) * BigFloat(r, bits), 1);
  return {cos(angle), sin(angle)};
}

long ApproxComplex::precision_bits() const { return std::min(re_.precision(), im_.precision()); }

bool ApproxComplex::is_numerically_zero() const {
  const BigFloat threshold = ldexp(BigFloat(1, precision_bits()), -precision_bits() / 2);
  return abs() < threshold;
}

ApproxComplex& ApproxComplex::operator+=(const ApproxComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ApproxComplex& ApproxComplex::operator-=(const ApproxComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ApproxComplex& ApproxComplex::operator*=(const ApproxComplex& rhs) {
  BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
  BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ApproxComplex& ApproxComplex::operator/=(const ApproxComplex& rhs) {
  return *this *= inverse(rhs);
}

ApproxComplex inverse(const ApproxComplex& z) {
  const BigFloat norm = z.real() * z.real() + z.imag() * z.imag();
  if (norm.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in complex field");
  return {z.real() / norm, -z.imag() / norm};
}

std::string ApproxComplex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() == '-') return re_.to_string(digits) + " - " + im.substr(1) + "i";
  return re_.to_string(digits) + " + " + im + "i";
}

}  // namespace trigsum
