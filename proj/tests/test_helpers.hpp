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

#include <gtest/gtest.h>

#include "trigsum/approx_complex.hpp"

namespace trigsum::testing {

/// |a - b| < 2^{-bits}.
inline ::testing::AssertionResult Near(const ApproxComplex& a, const ApproxComplex& b, long bits) {
  const BigFloat diff = (a - b).abs();
  if (diff < ldexp(BigFloat(1, a.precision_bits()), -bits)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_string(20) << " vs " << b.to_string(20)
                                       << " differ by " << diff.to_string(6);
}

inline ApproxComplex real_value(const std::string& decimal, long bits = 256) {
  return {BigFloat::from_string(decimal, bits), BigFloat(bits)};
}

inline ApproxComplex imag_value(const std::string& decimal, long bits = 256) {
  return {BigFloat(bits), BigFloat::from_string(decimal, bits)};
}

}  // namespace trigsum::testing
