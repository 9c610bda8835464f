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

#include <string>
#include <utility>
#include <vector>

#include "trigsum/identities.hpp"

namespace trigsum::detail {

using Binding = std::pair<IdentityParams, SweepTag>;

/// Wires the backend-generic Entry::lhs / Entry::rhs templates into a record.
template <class Entry>
IdentityRecord with_evaluators(IdentityRecord r) {
  r.lhs_exact = [](const IdentityParams& p, const ExactBackend& b) { return Entry::lhs(p, b); };
  r.rhs_exact = [](const IdentityParams& p, const ExactBackend& b) { return Entry::rhs(p, b); };
  r.lhs_float = [](const IdentityParams& p, const FloatBackend& b) { return Entry::lhs(p, b); };
  r.rhs_float = [](const IdentityParams& p, const FloatBackend& b) { return Entry::rhs(p, b); };
  return r;
}

inline long get(const std::optional<long>& v) { return v.value(); }
inline mpq_class get_x(const IdentityParams& p) { return p.x.value_or(mpq_class(0)); }

inline std::vector<Binding> just_k(long k) { return {{IdentityParams{k}, SweepTag::kPrimitiveOnly}}; }

/// The common x-aware field order lcm(k, denominator(scale * x)).
long field_with_x(long k, const mpq_class& x, long scale);

Applicability require(bool condition, const std::string& reason);
Applicability odd_k(long k);

/// Memoized enumerate_characters(k).
const std::vector<Character>& characters_mod(long k);

std::vector<IdentityRecord> plain_identities();
std::vector<IdentityRecord> character_identities();

}  // namespace trigsum::detail
