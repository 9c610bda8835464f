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
#include "trigsum/backends.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "trigsum/characters.hpp"
#include "trigsum/error.hpp"
#include "trigsum/number_theory.hpp"

namespace trigsum {
namespace {

mpq_class reduce_turn(const mpq_class& t) {
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return t - whole;
}

}  // namespace

ExactBackend::ExactBackend(long order) : order_(order) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "field order must be positive");
}

long ExactBackend::exponent_of(const mpq_class& t) const {
  const mpq_class scaled = reduce_turn(t) * order_;
  if (scaled.get_den() != 1)
    throw Error(ErrorCode::kNotInField, "e^{2 pi i (" + t.get_str() + ")} is not in Q(w_" +
                                            std::to_string(order_) + ")");
  return scaled.get_num().get_si();
}

CycloNumber ExactBackend::shifted_root_inverse(long m, int sign) const {
  static std::mutex mutex;
  static std::map<std::tuple<long, long, int>, CycloNumber> cache;
  const auto key = std::make_tuple(order_, mod(m, order_), sign);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const CycloNumber value = trigsum::inverse(root_of_unity_power(order_, m) + rational(sign));
  std::lock_guard lock(mutex);
  return cache.emplace(key, value).first->second;
}

CycloNumber ExactBackend::unit_root(const mpq_class& t) const {
  return root_of_unity_power(order_, exponent_of(t));
}

CycloNumber ExactBackend::cos(const mpq_class& t) const {
  const long m = exponent_of(t);
  return (root_of_unity_power(order_, m) + root_of_unity_power(order_, -m)) * mpq_class(1, 2);
}

CycloNumber ExactBackend::sec(const mpq_class& t) const {
  // 1 / cos = 2 w^m / (w^{2m} + 1)
  const long m = exponent_of(t);
  return root_of_unity_power(order_, m) * shifted_root_inverse(2 * m, 1) * mpq_class(2);
}

CycloNumber ExactBackend::i_sin(const mpq_class& t) const {
  const long m = exponent_of(t);
  return (root_of_unity_power(order_, m) - root_of_unity_power(order_, -m)) * mpq_class(1, 2);
}

CycloNumber ExactBackend::i_csc(const mpq_class& t) const {
  // i / sin = -2 w^m / (w^{2m} - 1)
  const long m = exponent_of(t);
  return root_of_unity_power(order_, m) * shifted_root_inverse(2 * m, -1) * mpq_class(-2);
}

CycloNumber ExactBackend::i_tan(const mpq_class& t) const {
  const long n = exponent_of(2 * t);
  return (root_of_unity_power(order_, n) - one()) * shifted_root_inverse(n, 1);
}

CycloNumber ExactBackend::i_cot(const mpq_class& t) const {
  const long n = exponent_of(2 * t);
  return -((root_of_unity_power(order_, n) + one()) * shifted_root_inverse(n, -1));
}

CycloNumber ExactBackend::sin_sq(const mpq_class& t) const {
  const long n = exponent_of(2 * t);
  return (rational(2) - root_of_unity_power(order_, n) - root_of_unity_power(order_, -n)) *
         mpq_class(1, 4);
}

CycloNumber ExactBackend::cos_sq(const mpq_class& t) const {
  const long n = exponent_of(2 * t);
  return (rational(2) + root_of_unity_power(order_, n) + root_of_unity_power(order_, -n)) *
         mpq_class(1, 4);
}

CycloNumber ExactBackend::i_sqrt(long k) const {
  if (k < 3 || k % 4 != 3 || !is_squarefree(k))
    throw Error(ErrorCode::kNotInField,
                "i*sqrt(" + std::to_string(k) + ") is only realized for squarefree k = 3 mod 4");
  if (order_ % k != 0)
    throw Error(ErrorCode::kNotInField, "field order " + std::to_string(order_) +
                                            " is not a multiple of " + std::to_string(k));
  CycloNumber sum = zero();
  const long step = order_ / k;
  for (long j = 1; j < k; ++j) {
    const int chi = jacobi_symbol(j, k);
    if (chi == 1) sum += root_of_unity_power(order_, j * step);
    if (chi == -1) sum -= root_of_unity_power(order_, j * step);
  }
  return sum;
}

FloatBackend::FloatBackend(long precision_bits) : bits_(precision_bits) {
  if (precision_bits < 32)
    throw Error(ErrorCode::kInvalidArgument, "float backend needs at least 32 bits");
}

BigFloat FloatBackend::angle(const mpq_class& t) const {
  return ldexp(BigFloat::pi(bits_) * BigFloat(reduce_turn(t), bits_), 1);
}

ApproxComplex FloatBackend::cos(const mpq_class& t) const { return real(trigsum::cos(angle(t))); }

ApproxComplex FloatBackend::sec(const mpq_class& t) const {
  return real(BigFloat(1, bits_) / trigsum::cos(angle(t)));
}

ApproxComplex FloatBackend::i_sin(const mpq_class& t) const {
  return imaginary(trigsum::sin(angle(t)));
}

ApproxComplex FloatBackend::i_csc(const mpq_class& t) const {
  return imaginary(BigFloat(1, bits_) / trigsum::sin(angle(t)));
}

ApproxComplex FloatBackend::i_tan(const mpq_class& t) const {
  return imaginary(trigsum::tan(angle(t)));
}

ApproxComplex FloatBackend::i_cot(const mpq_class& t) const {
  return imaginary(trigsum::cot(angle(t)));
}

ApproxComplex FloatBackend::sin_sq(const mpq_class& t) const {
  const BigFloat s = trigsum::sin(angle(t));
  return real(s * s);
}

ApproxComplex FloatBackend::cos_sq(const mpq_class& t) const {
  const BigFloat c = trigsum::cos(angle(t));
  return real(c * c);
}

ApproxComplex FloatBackend::i_sqrt(long k) const {
  return imaginary(trigsum::sqrt(BigFloat(k, bits_)));
}

}  // namespace trigsum
