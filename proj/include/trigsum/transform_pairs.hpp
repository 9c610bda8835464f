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

#include <optional>
#include <string>
#include <string_view>

#include "trigsum/periodic_fn.hpp"

namespace trigsum {

/// Tabulated discrete Fourier pairs: dft(time_side) = freq_side.
enum class PairName {
  kSinA,                  // +-1/2 at -a/a  <->  i sin(2 pi a n / k)
  kCosA,                  // 1/2 at +-a  <->  cos(2 pi a n / k)
  kSawtoothCot,           // saw(n/k)  <->  (i/2) cot(pi n / k), k odd
  kSignedAlternatingTan,  // (-1)^(n mod k), 0 at k|n  <->  i tan(pi n / k), k odd
  kSinSquared,            // 1/2, -1/4 at +-1  <->  sin^2(pi n / k)
  kTanDouble,             // +-1 by (n mod k) mod 4  <->  i tan(2 pi n / k), k = 3 mod 4
};

std::string_view to_string(PairName name);
std::optional<PairName> parse_pair_name(std::string_view text);

/// Empty when the pair is defined for (k, a); otherwise the reason it is not.
std::optional<std::string> pair_validity(PairName name, long k, long a);

template <class Backend>
struct TransformPair {
  PairName name;
  long k;
  long a;
  PeriodicFn<Backend> time_side;
  PeriodicFn<Backend> freq_side;
};

template <class Backend>
TransformPair<Backend> trig_table(PairName name, long k, long a, const Backend& b) {
  if (auto reason = pair_validity(name, k, a))
    throw Error(ErrorCode::kNotApplicable, "pair not defined for these parameters: " + *reason);
  using Fn = PeriodicFn<Backend>;
  auto rat = [&](long p, long q) { return b.rational(mpq_class(p, q)); };
  switch (name) {
    case PairName::kSinA:
      return {name, k, a,
              Fn::generate(b, k, [&](long n) {
                if (mod(a + n, k) == 0) return rat(1, 2);
                if (mod(a - n, k) == 0) return rat(-1, 2);
                return b.zero();
              }),
              Fn::generate(b, k, [&](long n) { return b.i_sin(turns(a * n, k)); })};
    case PairName::kCosA:
      return {name, k, a,
              Fn::generate(b, k, [&](long n) {
                return mod(a + n, k) == 0 || mod(a - n, k) == 0 ? rat(1, 2) : b.zero();
              }),
              Fn::generate(b, k, [&](long n) { return b.cos(turns(a * n, k)); })};
    case PairName::kSawtoothCot:
      return {name, k, a,
              Fn::generate(b, k, [&](long n) {
                // {n/k} - 1/2 = (2n - k) / 2k on 0 < n < k
                return n == 0 ? b.zero() : rat(2 * n - k, 2 * k);
              }),
              Fn::generate(b, k, [&](long n) {
                return n == 0 ? b.zero() : b.i_cot(turns(n, 2 * k)) * b.rational(mpq_class(1, 2));
              })};
    case PairName::kSignedAlternatingTan:
      return {name, k, a,
              Fn::generate(b, k, [&](long n) {
                if (n == 0) return b.zero();
                return n % 2 == 0 ? b.one() : rat(-1, 1);
              }),
              Fn::generate(b, k, [&](long n) { return b.i_tan(turns(n, 2 * k)); })};
    case PairName::kSinSquared:
      return {name, k, a,
              Fn::generate(b, k, [&](long n) {
                if (n == 0) return rat(1, 2);
                if (n == 1 || n == k - 1) return rat(-1, 4);
                return b.zero();
              }),
              Fn::generate(b, k, [&](long n) { return b.sin_sq(turns(n, 2 * k)); })};
    case PairName::kTanDouble:
      return {name, k, a,
              Fn::generate(b, k, [&](long n) {
                if (n == 0) return b.zero();
                return n % 4 <= 1 ? b.one() : rat(-1, 1);
              }),
              Fn::generate(b, k, [&](long n) { return b.i_tan(turns(n, k)); })};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown transform pair");
}

}  // namespace trigsum
