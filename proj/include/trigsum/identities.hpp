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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigsum/backends.hpp"
#include "trigsum/characters.hpp"

namespace trigsum {

/// One parameter binding. x is stored in turns (x / 2 pi) so that sample
/// points such as pi/6 stay exact.
struct IdentityParams {
  std::optional<long> k{};
  std::optional<long> a{};
  std::optional<long> b{};
  std::optional<mpq_class> x{};
  /// Index into enumerate_characters(k); empty selects the Kronecker character.
  std::optional<long> character_index{};

  friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

std::string to_string(const IdentityParams& p);

struct ParamSchema {
  bool k = true;
  bool a = false;
  bool b = false;
  bool x = false;
  bool character = false;
};

struct Applicability {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Applicability yes() { return {}; }
  static Applicability no(std::string why) { return {false, std::move(why)}; }
};

enum class SweepTag { kPrimitiveOnly, kImprimitiveProbe };

struct IdentityRecord {
  std::string id;
  std::string anchor;
  std::string statement;
  std::string hypotheses;
  ParamSchema params;
  /// Entries without a k parameter sweep over their own fixed domain.
  bool k_independent = false;

  std::function<Applicability(long k)> applicable_for_k;
  std::function<Applicability(const IdentityParams&)> applicable;
  /// Power of i multiplying both sides in the exactified form.
  std::function<int(const IdentityParams&)> i_power;
  /// Order L of the cyclotomic field Q(w_L) holding the exactified sides.
  std::function<long(const IdentityParams&)> field_order;
  /// In-hypothesis bindings for one k (or the fixed domain when k-independent).
  std::function<std::vector<std::pair<IdentityParams, SweepTag>>(long k, bool probes)> sweep_domain;

  std::function<CycloNumber(const IdentityParams&, const ExactBackend&)> lhs_exact;
  std::function<CycloNumber(const IdentityParams&, const ExactBackend&)> rhs_exact;
  std::function<ApproxComplex(const IdentityParams&, const FloatBackend&)> lhs_float;
  std::function<ApproxComplex(const IdentityParams&, const FloatBackend&)> rhs_float;
};

/// The fixed, ordered catalog.
const std::vector<IdentityRecord>& catalog();
/// Throws Error(kUnknownIdentity).
const IdentityRecord& lookup(std::string_view id);

/// The x sample points used by sweeps, in turns: 0, pi/6, pi/4, 2pi/5.
const std::vector<mpq_class>& x_samples();

Applicability applicable(std::string_view id, const IdentityParams& p);

/// Exactified sides (both multiplied by i^{i_power}). Throw
/// Error(kNotApplicable) outside the hypotheses.
CycloNumber eval_lhs(std::string_view id, const IdentityParams& p, const ExactBackend& b);
CycloNumber eval_rhs(std::string_view id, const IdentityParams& p, const ExactBackend& b);
ApproxComplex eval_lhs(std::string_view id, const IdentityParams& p, const FloatBackend& b);
ApproxComplex eval_rhs(std::string_view id, const IdentityParams& p, const FloatBackend& b);

/// The exact backend sized for this binding.
ExactBackend exact_backend_for(std::string_view id, const IdentityParams& p);

enum class BackendKind { kExact, kFloat };

struct BackendSpec {
  BackendKind kind = BackendKind::kFloat;
  long precision_bits = 256;
  /// Float acceptance threshold; defaults to 2^{-precision/2}.
  std::optional<BigFloat> tolerance;

  std::string descriptor() const;
  BigFloat active_tolerance() const;
};

enum class Verdict { kPass, kFail, kNotApplicable };
std::string_view to_string(Verdict v);

struct CheckResult {
  std::string id;
  IdentityParams params;
  SweepTag tag = SweepTag::kPrimitiveOnly;
  std::string backend;
  int i_power = 0;
  long field_order = 0;  // exact backend only
  /// Natural (un-exactified) values; for the exact backend these are
  /// embeddings of the exact sides.
  std::optional<ApproxComplex> lhs;
  std::optional<ApproxComplex> rhs;
  /// Exactified sides as polynomials in w (exact backend only).
  std::string lhs_exact;
  std::string rhs_exact;
  std::optional<BigFloat> residual;
  Verdict verdict = Verdict::kNotApplicable;
  std::string reason;
};

/// Never throws for catalog ids: failures are encoded in the result.
CheckResult check(std::string_view id, const IdentityParams& p, const BackendSpec& backend,
                  SweepTag tag = SweepTag::kPrimitiveOnly);

/// The character selected by a binding (Kronecker when no index is given).
const Character& character_for(const IdentityParams& p);
/// Memoized class_number(k).h.
long class_number_h(long k);

/// Multiplies z by i^q.
ApproxComplex rotate_by_i(const ApproxComplex& z, int q);

/// Closed form of the character-weighted cotangent transform
///   F_p(n) = (1/k) sum_j chi(j) cot^p(pi j/k) w^{jn},  p = 1 or 2,
/// returned multiplied by i for p = 1 (so the value lies in Q(w_k)) and as
/// is for p = 2. chi must be real, primitive and odd with odd k >= 7.
template <class Backend>
typename Backend::Scalar char_cot_transform(const Character& chi, long n, int power,
                                            const Backend& b);

/// The same quantity by direct summation.
template <class Backend>
typename Backend::Scalar char_cot_transform_direct(const Character& chi, long n, int power,
                                                   const Backend& b);

namespace detail {
void require_cot_transform_character(const Character& chi, int power);
}

template <class Backend>
typename Backend::Scalar char_cot_transform_direct(const Character& chi, long n, int power,
                                                   const Backend& b) {
  detail::require_cot_transform_character(chi, power);
  const long k = chi.modulus();
  auto acc = b.zero();
  for (long j = 1; j < k; ++j) {
    const int c = chi.real_value(j);
    if (c == 0) continue;
    auto term = b.i_cot(turns(j, 2 * k));
    if (power == 2) term = -(term * term);
    term *= b.unit_root(turns(mod(j * n, k), k));
    if (c > 0) acc += term; else acc -= term;
  }
  return acc * b.rational(mpq_class(1, k));
}

template <class Backend>
typename Backend::Scalar char_cot_transform(const Character& chi, long n, int power,
                                            const Backend& b) {
  detail::require_cot_transform_character(chi, power);
  const long k = chi.modulus();
  const long h = class_number_h(k);
  const long r = mod(n, k);
  long bracket = 0;
  if (power == 1) {
    long partial = 0;
    for (long m = 0; m <= r; ++m) partial += chi.real_value(m);
    bracket = 2 * h + chi.real_value(r) - 2 * partial;
  } else {
    long weighted = 0;
    for (long m = 0; m <= r; ++m) weighted += chi.real_value(m) * (r - m);
    bracket = 4 * r * h - chi.real_value(r) - 4 * weighted;
  }
  auto value = b.i_sqrt(k) * b.rational(mpq_class(bracket, k));
#ifndef NDEBUG
  if (!b.equal(value, char_cot_transform_direct(chi, n, power, b)))
    throw std::logic_error("char_cot_transform: closed form disagrees with direct DFT");
#endif
  return value;
}

}  // namespace trigsum
