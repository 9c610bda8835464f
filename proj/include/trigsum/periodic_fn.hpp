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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigsum/error.hpp"
#include "trigsum/number_theory.hpp"

namespace trigsum {

enum class Parity { kEven, kOdd, kNeither };
enum class DotMode { kReflect, kSameSign };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::kEven: return "even";
    case Parity::kOdd: return "odd";
    default: return "neither";
  }
}

/// A k-periodic function on Z, stored as its values on 0..k-1.
template <class Backend>
class PeriodicFn {
 public:
  using Scalar = typename Backend::Scalar;

  PeriodicFn(Backend backend, std::vector<Scalar> values)
      : backend_(std::move(backend)), values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorCode::kInvalidArgument, "periodic function needs k >= 1");
  }

  /// Tabulates f(n) for n = 0..k-1.
  template <class F>
  static PeriodicFn generate(const Backend& backend, long k, F&& f) {
    std::vector<Scalar> values;
    values.reserve(k);
    for (long n = 0; n < k; ++n) values.push_back(f(n));
    return PeriodicFn(backend, std::move(values));
  }

  static PeriodicFn delta(const Backend& backend, long k, long at) {
    return generate(backend, k, [&](long n) {
      return n == mod(at, k) ? backend.one() : backend.zero();
    });
  }

  static PeriodicFn constant(const Backend& backend, long k, const mpq_class& c) {
    return generate(backend, k, [&](long) { return backend.rational(c); });
  }

  long modulus() const { return static_cast<long>(values_.size()); }
  const Backend& backend() const { return backend_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator()(long n) const { return values_[mod(n, modulus())]; }

 private:
  Backend backend_;
  std::vector<Scalar> values_;
};

namespace detail {

template <class Backend>
void require_same_modulus(const PeriodicFn<Backend>& f, const PeriodicFn<Backend>& g) {
  if (f.modulus() != g.modulus())
    throw Error(ErrorCode::kModulusMismatch, "periodic functions have different periods: " +
                                                 std::to_string(f.modulus()) + " vs " +
                                                 std::to_string(g.modulus()));
}

// sum_j f(j) w^{sign * j n} for every n.
template <class Backend>
PeriodicFn<Backend> fourier_sum(const PeriodicFn<Backend>& f, long sign) {
  const long k = f.modulus();
  const Backend& b = f.backend();
  std::vector<typename Backend::Scalar> roots;
  roots.reserve(k);
  for (long m = 0; m < k; ++m) roots.push_back(b.unit_root(turns(m, k)));
  return PeriodicFn<Backend>::generate(b, k, [&](long n) {
    auto acc = b.zero();
    for (long j = 0; j < k; ++j) acc += f(j) * roots[mod(sign * j * n, k)];
    return acc;
  });
}

}  // namespace detail

/// hat f(n) = sum_j f(j) w^{-jn}.
template <class Backend>
PeriodicFn<Backend> dft(const PeriodicFn<Backend>& f) {
  return detail::fourier_sum(f, -1);
}

/// f(n) = (1/k) sum_j F(j) w^{jn}.
template <class Backend>
PeriodicFn<Backend> inverse_dft(const PeriodicFn<Backend>& F) {
  auto g = detail::fourier_sum(F, 1);
  const auto scale = F.backend().rational(mpq_class(1, F.modulus()));
  auto values = g.values();
  for (auto& v : values) v *= scale;
  return PeriodicFn<Backend>(F.backend(), std::move(values));
}

/// (f * g)(n) = sum_j f(j) g(n - j).
template <class Backend>
PeriodicFn<Backend> convolve(const PeriodicFn<Backend>& f, const PeriodicFn<Backend>& g) {
  detail::require_same_modulus(f, g);
  const Backend& b = f.backend();
  return PeriodicFn<Backend>::generate(b, f.modulus(), [&](long n) {
    auto acc = b.zero();
    for (long j = 0; j < f.modulus(); ++j) acc += f(j) * g(n - j);
    return acc;
  });
}

template <class Backend>
PeriodicFn<Backend> pointwise_product(const PeriodicFn<Backend>& f, const PeriodicFn<Backend>& g) {
  detail::require_same_modulus(f, g);
  return PeriodicFn<Backend>::generate(f.backend(), f.modulus(),
                                       [&](long n) { return f(n) * g(n); });
}

/// Elementwise equality under the backend's notion of equality.
template <class Backend>
bool equal(const PeriodicFn<Backend>& f, const PeriodicFn<Backend>& g) {
  if (f.modulus() != g.modulus()) return false;
  for (long n = 0; n < f.modulus(); ++n)
    if (!f.backend().equal(f(n), g(n))) return false;
  return true;
}

/// Even if f(-n) = f(n) for all n, odd if f(-n) = -f(n). The zero function
/// reports even.
template <class Backend>
Parity parity(const PeriodicFn<Backend>& f) {
  const Backend& b = f.backend();
  bool even = true;
  bool odd = true;
  for (long n = 0; n < f.modulus() && (even || odd); ++n) {
    if (even && !b.equal(f(-n), f(n))) even = false;
    if (odd && !b.equal(f(-n), -f(n))) odd = false;
  }
  if (even) return Parity::kEven;
  return odd ? Parity::kOdd : Parity::kNeither;
}

namespace detail {

// +1 or -1 relating sum f(m)g(+-m) to (1/k) sum hat f hat g.
template <class Backend>
int dot_sign(const PeriodicFn<Backend>& f, const PeriodicFn<Backend>& g, DotMode mode) {
  if (mode == DotMode::kReflect) return 1;
  const Parity pf = parity(f);
  const Parity pg = parity(g);
  if (pf == Parity::kOdd || pg == Parity::kOdd) return -1;
  if (pf == Parity::kEven || pg == Parity::kEven) return 1;
  throw Error(ErrorCode::kInvalidArgument,
              "same-sign dot sum needs at least one even or odd function");
}

}  // namespace detail

/// The Fourier side: +-(1/k) sum_j hat f(j) hat g(j).
template <class Backend>
typename Backend::Scalar dot_sum_spectral(const PeriodicFn<Backend>& f,
                                          const PeriodicFn<Backend>& g, DotMode mode) {
  detail::require_same_modulus(f, g);
  const int sign = detail::dot_sign(f, g, mode);
  const auto fh = dft(f);
  const auto gh = dft(g);
  const Backend& b = f.backend();
  auto acc = b.zero();
  for (long j = 0; j < f.modulus(); ++j) acc += fh(j) * gh(j);
  return acc * b.rational(mpq_class(sign, f.modulus()));
}

/// sum_m f(m) g(-m) (reflect) or sum_m f(m) g(m) (same_sign). Builds without
/// NDEBUG also evaluate the Fourier side and throw std::logic_error if the
/// two disagree.
template <class Backend>
typename Backend::Scalar dot_sum(const PeriodicFn<Backend>& f, const PeriodicFn<Backend>& g,
                                 DotMode mode) {
  detail::require_same_modulus(f, g);
  const Backend& b = f.backend();
  const long reflect = mode == DotMode::kReflect ? -1 : 1;
  if (mode == DotMode::kSameSign) detail::dot_sign(f, g, mode);
  auto acc = b.zero();
  for (long m = 0; m < f.modulus(); ++m) acc += f(m) * g(reflect * m);
#ifndef NDEBUG
  if (!b.equal(acc, dot_sum_spectral(f, g, mode)))
    throw std::logic_error("dot_sum: direct and Fourier sides disagree");
#endif
  return acc;
}

}  // namespace trigsum
