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
#include "trigsum/identities.hpp"

#include <map>
#include <mutex>

#include "catalog_internal.hpp"
#include "trigsum/error.hpp"

namespace trigsum {

std::string to_string(const IdentityParams& p) {
  std::string out;
  auto add = [&out](const std::string& item) {
    if (!out.empty()) out += ' ';
    out += item;
  };
  if (p.k) add("k=" + std::to_string(*p.k));
  if (p.a) add("a=" + std::to_string(*p.a));
  if (p.b) add("b=" + std::to_string(*p.b));
  if (p.x) add("x=" + p.x->get_str() + "*2pi");
  if (p.character_index) add("chi=" + std::to_string(*p.character_index));
  return out;
}

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> entries = [] {
    auto all = detail::plain_identities();
    auto chars = detail::character_identities();
    all.insert(all.end(), std::make_move_iterator(chars.begin()),
               std::make_move_iterator(chars.end()));
    return all;
  }();
  return entries;
}

const IdentityRecord& lookup(std::string_view id) {
  for (const auto& r : catalog())
    if (r.id == id) return r;
  throw Error(ErrorCode::kUnknownIdentity, "unknown identity: " + std::string(id));
}

const std::vector<mpq_class>& x_samples() {
  static const std::vector<mpq_class> xs = {mpq_class(0), mpq_class(1, 12), mpq_class(1, 8),
                                            mpq_class(1, 5)};
  return xs;
}

Applicability applicable(std::string_view id, const IdentityParams& p) {
  return lookup(id).applicable(p);
}

namespace {

const IdentityRecord& checked(std::string_view id, const IdentityParams& p) {
  const IdentityRecord& r = lookup(id);
  if (auto ok = r.applicable(p); !ok)
    throw Error(ErrorCode::kNotApplicable, r.id + " not applicable: " + ok.reason);
  return r;
}

}  // namespace

CycloNumber eval_lhs(std::string_view id, const IdentityParams& p, const ExactBackend& b) {
  return checked(id, p).lhs_exact(p, b);
}
CycloNumber eval_rhs(std::string_view id, const IdentityParams& p, const ExactBackend& b) {
  return checked(id, p).rhs_exact(p, b);
}
ApproxComplex eval_lhs(std::string_view id, const IdentityParams& p, const FloatBackend& b) {
  return checked(id, p).lhs_float(p, b);
}
ApproxComplex eval_rhs(std::string_view id, const IdentityParams& p, const FloatBackend& b) {
  return checked(id, p).rhs_float(p, b);
}

ExactBackend exact_backend_for(std::string_view id, const IdentityParams& p) {
  return ExactBackend(checked(id, p).field_order(p));
}

std::string BackendSpec::descriptor() const {
  return kind == BackendKind::kExact ? "exact" : "float/" + std::to_string(precision_bits);
}

BigFloat BackendSpec::active_tolerance() const {
  if (kind == BackendKind::kExact) return BigFloat(0, precision_bits);
  if (tolerance) return *tolerance;
  return ldexp(BigFloat(1, precision_bits), -precision_bits / 2);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

ApproxComplex rotate_by_i(const ApproxComplex& z, int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return {-z.real(), -z.imag()};
    default: return {z.imag(), -z.real()};
  }
}

CheckResult check(std::string_view id, const IdentityParams& p, const BackendSpec& backend,
                  SweepTag tag) {
  const IdentityRecord& record = lookup(id);
  CheckResult r;
  r.id = record.id;
  r.params = p;
  r.tag = tag;
  r.backend = backend.descriptor();
  if (auto ok = record.applicable(p); !ok) {
    r.reason = ok.reason;
    return r;
  }
  r.i_power = record.i_power(p);
  const long bits = backend.precision_bits;
  try {
    if (backend.kind == BackendKind::kExact) {
      r.field_order = record.field_order(p);
      const ExactBackend b(r.field_order);
      const CycloNumber lhs = record.lhs_exact(p, b);
      const CycloNumber rhs = record.rhs_exact(p, b);
      r.lhs_exact = lhs.to_string();
      r.rhs_exact = rhs.to_string();
      const ApproxComplex lz = embed_complex(lhs, bits);
      const ApproxComplex rz = embed_complex(rhs, bits);
      r.lhs = rotate_by_i(lz, -r.i_power);
      r.rhs = rotate_by_i(rz, -r.i_power);
      if (lhs == rhs) {
        r.residual = BigFloat(0, bits);
        r.verdict = Verdict::kPass;
      } else {
        BigFloat diff = (lz - rz).abs();
        if (diff.is_zero()) diff = ldexp(BigFloat(1, bits), -bits);
        r.residual = diff;
        r.verdict = Verdict::kFail;
        r.reason = "exact sides differ";
      }
    } else {
      const FloatBackend b(bits);
      const ApproxComplex lhs = record.lhs_float(p, b);
      const ApproxComplex rhs = record.rhs_float(p, b);
      r.lhs = rotate_by_i(lhs, -r.i_power);
      r.rhs = rotate_by_i(rhs, -r.i_power);
      r.residual = (lhs - rhs).abs();
      const bool pass = *r.residual <= backend.active_tolerance();
      r.verdict = pass ? Verdict::kPass : Verdict::kFail;
      if (!pass) r.reason = "residual exceeds tolerance";
    }
  } catch (const Error& e) {
    r.lhs.reset();
    r.rhs.reset();
    r.residual.reset();
    if (e.code() == ErrorCode::kNotInField || e.code() == ErrorCode::kNotApplicable) {
      r.verdict = Verdict::kNotApplicable;
    } else {
      r.verdict = Verdict::kFail;
    }
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.lhs.reset();
    r.rhs.reset();
    r.residual.reset();
    r.verdict = Verdict::kFail;
    r.reason = e.what();
  }
  return r;
}

namespace detail {

const std::vector<Character>& characters_mod(long k) {
  static std::mutex mutex;
  static std::map<long, std::vector<Character>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, enumerate_characters(k)).first;
  return it->second;
}

void require_cot_transform_character(const Character& chi, int power) {
  if (power != 1 && power != 2)
    throw Error(ErrorCode::kInvalidArgument, "cotangent transform power must be 1 or 2");
  const long k = chi.modulus();
  if (k < 7 || k % 2 == 0 || !chi.is_real() || !chi.is_odd() || chi.is_principal() ||
      !chi.is_primitive())
    throw Error(ErrorCode::kNotApplicable,
                "cotangent transform needs a real primitive odd character with odd k >= 7");
}

}  // namespace detail

const Character& character_for(const IdentityParams& p) {
  const long k = p.k.value();
  if (p.character_index) {
    const auto& all = detail::characters_mod(k);
    if (*p.character_index < 0 || *p.character_index >= static_cast<long>(all.size()))
      throw Error(ErrorCode::kInvalidArgument, "character index out of range");
    return all[*p.character_index];
  }
  static std::mutex mutex;
  static std::map<long, Character> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, kronecker_character(k)).first;
  return it->second;
}

long class_number_h(long k) {
  static std::mutex mutex;
  static std::map<long, long> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  const long h = class_number(k).h;
  std::lock_guard lock(mutex);
  cache.emplace(k, h);
  return h;
}

}  // namespace trigsum
