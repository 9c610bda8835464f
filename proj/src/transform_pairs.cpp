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
#include "trigsum/transform_pairs.hpp"

namespace trigsum {

std::string_view to_string(PairName name) {
  switch (name) {
    case PairName::kSinA: return "sin_a";
    case PairName::kCosA: return "cos_a";
    case PairName::kSawtoothCot: return "sawtooth_cot";
    case PairName::kSignedAlternatingTan: return "signed_alternating_tan";
    case PairName::kSinSquared: return "sin_squared";
    case PairName::kTanDouble: return "tan_double";
  }
  return "?";
}

std::optional<PairName> parse_pair_name(std::string_view text) {
  for (PairName p : {PairName::kSinA, PairName::kCosA, PairName::kSawtoothCot,
                     PairName::kSignedAlternatingTan, PairName::kSinSquared, PairName::kTanDouble})
    if (to_string(p) == text) return p;
  return std::nullopt;
}

std::optional<std::string> pair_validity(PairName name, long k, long a) {
  if (k < 1) return "k must be positive";
  switch (name) {
    case PairName::kSinA:
    case PairName::kCosA:
      if (a <= 0 || a >= k) return "a must satisfy 0 < a < k";
      if (2 * a == k) return "a must differ from k/2";
      return std::nullopt;
    case PairName::kSawtoothCot:
    case PairName::kSignedAlternatingTan:
      if (k % 2 == 0) return "k must be odd";
      return std::nullopt;
    case PairName::kSinSquared:
      if (k < 3) return "k must be at least 3";
      return std::nullopt;
    case PairName::kTanDouble:
      if (k % 4 != 3) return "k must be 3 mod 4";
      return std::nullopt;
  }
  return "unknown pair";
}

}  // namespace trigsum
