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
// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "trigsum/characters.hpp"
#include "trigsum/identities.hpp"
#include "trigsum/periodic_fn.hpp"
#include "trigsum/sweep.hpp"
#include "trigsum/transform_pairs.hpp"

namespace trigsum {
namespace {

const BigFloat& two_to_minus_100() {
  static const BigFloat t = ldexp(BigFloat(1, 256), -100);
  return t;
}

struct Outcome {
  bool ok = true;
  long checks = 0;
  std::ostringstream note;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) note << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BackendSpec exact_spec() { return {BackendKind::kExact, 256, std::nullopt}; }
BackendSpec float_spec() { return {BackendKind::kFloat, 256, std::nullopt}; }

// Exact for k <= 31 (residual must be 0), float/256 above (residual < 2^-100).
void check_split(Outcome& out, const std::string& id, const IdentityParams& p) {
  const bool exact = p.k && *p.k <= 31;
  const CheckResult r = check(id, p, exact ? exact_spec() : float_spec());
  const bool ok = r.verdict == Verdict::kPass && r.residual &&
                  (exact ? r.residual->is_zero() : *r.residual < two_to_minus_100());
  out.expect(ok, id + " " + to_string(p) + " " + r.reason);
}

void check_float(Outcome& out, const std::string& id, const IdentityParams& p) {
  const CheckResult r = check(id, p, float_spec());
  out.expect(r.verdict == Verdict::kPass && *r.residual < two_to_minus_100(),
             id + " " + to_string(p) + " " + r.reason);
}

Outcome criterion_1() {
  Outcome out;
  const auto t0 = Clock::now();
  for (long k = 3; k <= 199; k += 2) check_split(out, "stern_tan2", IdentityParams{k});
  const double secs = seconds_since(t0);
  out.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  out.note << "odd k 3..199";
  return out;
}

Outcome criterion_2() {
  Outcome out;
  for (const char* id : {"cot2_sum", "csc2_sum", "sec2_sum", "tan_csc", "cot_csc", "tan4_sum"}) {
    const IdentityRecord& r = lookup(id);
    for (long k = 2; k <= 199; ++k)
      if (r.applicable_for_k(k)) check_split(out, id, IdentityParams{k});
  }
  out.note << "six companion sums, k <= 199";
  return out;
}

Outcome criterion_3() {
  Outcome out;
  const auto t0 = Clock::now();
  for (const char* id : {"eisenstein_cot_sin", "tan_sin", "sin_csc", "tan_csc", "cot_csc"}) {
    const IdentityRecord& r = lookup(id);
    for (long k = 2; k <= 99; ++k) {
      if (!r.applicable_for_k(k)) continue;
      for (const auto& [p, tag] : r.sweep_domain(k, false)) check_split(out, id, p);
    }
  }
  const double secs = seconds_since(t0);
  out.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  out.note << "all 0 < a < k, k <= 99";
  return out;
}

Outcome criterion_4() {
  Outcome out;
  const FloatBackend flt(256);
  for (const char* id : {"sin_power_sum", "cos_power_sum"}) {
    const IdentityRecord& r = lookup(id);
    for (long k = 2; k <= 60; ++k) {
      for (const auto& [p, tag] : r.sweep_domain(k, false)) check_float(out, id, p);
      for (long a = 1; a <= 6; ++a)
        for (long b = 1; a * b < k; ++b) {
          const ApproxComplex ref = eval_lhs(id, IdentityParams{k, a, b, mpq_class(0)}, flt);
          for (const auto& x : x_samples())
            out.expect((eval_lhs(id, IdentityParams{k, a, b, x}, flt) - ref).abs() <
                           two_to_minus_100(),
                       std::string(id) + " x-invariance k=" + std::to_string(k));
        }
    }
  }
  out.note << "a <= 6, ab < k <= 60, x in {0, pi/6, pi/4, 2pi/5}";
  return out;
}

Outcome criterion_5() {
  Outcome out;
  for (const char* id : {"binom_square", "binom_alt"})
    for (long a = 1; a <= 20; ++a) {
      IdentityParams p;
      p.a = a;
      const CheckResult r = check(id, p, exact_spec());
      out.expect(r.verdict == Verdict::kPass && r.residual->is_zero(),
                 std::string(id) + " a=" + std::to_string(a));
    }
  out.note << "a = 1..20, exact";
  return out;
}

Outcome criterion_6() {
  Outcome out;
  long moduli = 0;
  for (long k = 7; k <= 199; ++k) {
    if (k % 4 != 3 || !is_squarefree(k)) continue;
    ++moduli;
    const ClassNumberResult r = class_number(k);
    out.expect(r.via_weighted_sum == r.via_half_sum && r.via_weighted_sum == mpq_class(r.h) &&
                   r.h == oracle::reduced_form_count(k),
               "h(-" + std::to_string(k) + ")");
  }
  out.expect(class_number(7).h == 1 && class_number(15).h == 2 && class_number(23).h == 3,
             "spot values");
  out.note << moduli << " moduli against the reduced-form count";
  return out;
}

Outcome criterion_7() {
  Outcome out;
  const FloatBackend flt(256);
  long real_chars = 0;
  for (long k = 1; k <= 60; ++k) {
    for (const auto& chi : enumerate_characters(k)) {
      if (!chi.is_real()) continue;
      ++real_chars;
      const ExactBackend b(lcm(k, chi.order()));
      const CycloNumber g1 = gauss_sum(1, chi, b);
      bool separable = true;
      for (long n = 0; n < k && separable; ++n)
        separable = gauss_sum(n, chi, b) == chi.value(b, n) * g1;
      out.expect(separable == chi.is_primitive(), "separability mod " + std::to_string(k));
      if (chi.is_primitive() && chi.is_odd()) {
        out.expect(g1 * g1 == b.rational(-k), "G^2 = -k mod " + std::to_string(k));
        out.expect((gauss_sum(1, chi, flt) - flt.i_sqrt(k)).abs() < two_to_minus_100(),
                   "G = i sqrt k mod " + std::to_string(k));
      }
    }
  }
  out.note << real_chars << " real characters, k <= 60";
  return out;
}

Outcome criterion_8() {
  Outcome out;
  const auto t0 = Clock::now();
  const char* ids[] = {"char_sin",      "char_sin_power", "char_cos_power", "bz_cot",
                       "bz_cot_b",      "bz_tan",         "bz_csc",         "bz_cot_cospow",
                       "bz_cot_cos",    "cot2_sin",       "char_sin2_cot",  "char_sin2_tan",
                       "char_sin2_tan2", "char_sin2_over_sin4"};
  long bindings = 0;
  for (const char* id : ids) {
    const IdentityRecord& r = lookup(id);
    for (long k = 7; k <= 101; ++k) {
      if (!r.applicable_for_k(k)) continue;
      for (const auto& [p, tag] : r.sweep_domain(k, false)) {
        ++bindings;
        const CheckResult c = check(id, p, float_spec());
        out.expect(c.verdict == Verdict::kPass, std::string(id) + " " + to_string(p));
      }
    }
  }
  const CheckResult k7 = check("char_sin2_over_sin4", IdentityParams{7}, exact_spec());
  out.expect(k7.verdict == Verdict::kPass && k7.rhs_exact == "0", "k=7 value 0");
  const CheckResult k11 = check("char_sin2_over_sin4", IdentityParams{11}, float_spec());
  const BigFloat expected = BigFloat::from_string(
      "-9.94987437106619954734479821001206005178126563676806079117605", 256);
  out.expect(k11.verdict == Verdict::kPass &&
                 abs(k11.lhs->real() - expected) < two_to_minus_100() &&
                 class_number_h(11) == 1,
             "k=11 value -3 sqrt(11) h(-11)");
  const double secs = seconds_since(t0);
  out.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s");
  out.note << bindings << " bindings, k <= 101";
  return out;
}

Outcome criterion_9() {
  Outcome out;
  using Fn = PeriodicFn<ExactBackend>;
  std::mt19937_64 rng(20261018);
  auto random_fn = [&](const ExactBackend& b, long k) {
    return Fn::generate(b, k, [&](long) { return b.rational(oracle::random_rational(rng)); });
  };
  for (long k = 1; k <= 40; ++k) {
    const ExactBackend b(k);
    const Fn f = random_fn(b, k);
    out.expect(equal(inverse_dft(dft(f)), f), "round trip k=" + std::to_string(k));
    const int pairs = (k >= 3 && k <= 24) ? 100 : 1;
    for (int trial = 0; trial < pairs; ++trial) {
      const Fn u = random_fn(b, k);
      const Fn v = random_fn(b, k);
      const Fn c = convolve(u, v);
      out.expect(c.values() == oracle::direct_convolution(u.values(), v.values()),
                 "convolution oracle k=" + std::to_string(k));
      out.expect(equal(dft(c), pointwise_product(dft(u), dft(v))),
                 "convolution theorem k=" + std::to_string(k));
    }
    const Fn even = Fn::generate(b, k, [&](long n) { return f(n) + f(-n); });
    const Fn odd = Fn::generate(b, k, [&](long n) { return f(n) - f(-n); });
    for (const Fn* h : {&f, &even, &odd})
      out.expect(parity(*h) == parity(dft(*h)), "parity transfer k=" + std::to_string(k));
    for (PairName name : {PairName::kSinA, PairName::kCosA, PairName::kSawtoothCot,
                          PairName::kSignedAlternatingTan, PairName::kSinSquared,
                          PairName::kTanDouble})
      for (long a = 0; a < k; ++a) {
        if (pair_validity(name, k, a)) continue;
        const auto pair = trig_table(name, k, a, b);
        out.expect(equal(dft(pair.time_side), pair.freq_side),
                   std::string(to_string(name)) + " k=" + std::to_string(k));
      }
    if (k >= 7 && has_real_primitive_odd_character(k)) {
      const Character chi = kronecker_character(k);
      for (long n = 0; n < k; ++n)
        for (int power : {1, 2})
          out.expect(char_cot_transform(chi, n, power, b) ==
                         char_cot_transform_direct(chi, n, power, b),
                     "cot transform k=" + std::to_string(k));
    }
  }
  out.note << "exact backend, k <= 40, 100 convolution pairs per k in 3..24";
  return out;
}

Outcome criterion_10() {
  Outcome out;
  const FloatBackend flt(256);
  long moduli = 0;
  for (long k = 7; k <= 101; ++k) {
    if (!lookup("char_sin2_over_sin4").applicable_for_k(k)) continue;
    ++moduli;
    const IdentityParams p{k};
    auto v = [&](const char* id) { return eval_lhs(id, p, flt); };
    const ApproxComplex quarter(mpq_class(1, 4), 256);
    const ApproxComplex half(mpq_class(1, 2), 256);
    const ApproxComplex combo =
        quarter * v("char_sin2_cot") - quarter * v("char_sin2_tan") + half * v("char_sin2_tan2");
    out.expect((v("char_sin2_over_sin4") - combo).abs() < two_to_minus_100(),
               "decomposition k=" + std::to_string(k));
    out.expect((v("bz_csc") - half * (v("bz_cot") + v("bz_tan"))).abs() < two_to_minus_100(),
               "csc split k=" + std::to_string(k));
  }
  out.note << moduli << " moduli, k <= 101";
  return out;
}

}  // namespace
}  // namespace trigsum

int main() {
  using trigsum::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"stern tangent-square sum", trigsum::criterion_1},
      {"companion sums", trigsum::criterion_2},
      {"Eisenstein family", trigsum::criterion_3},
      {"even power sums and x-invariance", trigsum::criterion_4},
      {"binomial identities", trigsum::criterion_5},
      {"class numbers", trigsum::criterion_6},
      {"Gauss-sum separability", trigsum::criterion_7},
      {"character identities", trigsum::criterion_8},
      {"structural suites", trigsum::criterion_9},
      {"decomposition consistency", trigsum::criterion_10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    const auto t0 = trigsum::Clock::now();
    try {
      out = run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << "exception: " << e.what();
    }
    failures += !out.ok;
    std::printf("criterion %2d %-34s %s  (%ld checks, %.1f s; %s)\n", index, name,
                out.ok ? "PASS" : "FAIL", out.checks, trigsum::seconds_since(t0),
                out.note.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
