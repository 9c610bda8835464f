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
// Trigonometric sums without characters, and the two binomial identities.

#include <numeric>

#include "catalog_internal.hpp"

namespace trigsum::detail {
namespace {

mpq_class q(long p, long r = 1) { return mpq_class(p, r); }

template <class B, class F>
typename B::Scalar sum_j(const B& b, long from, long to, F&& term) {
  auto acc = b.zero();
  for (long j = from; j < to; ++j) acc += term(j);
  return acc;
}

struct SternTan2 {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) {
      auto t = b.i_tan(turns(j, 2 * k));
      return t * t;
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(-(k * k - k)));
  }
};

struct Cot2Sum {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) {
      auto c = b.i_cot(turns(j, 2 * k));
      return c * c;
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(-(k - 1) * (k - 2), 3));
  }
};

struct Csc2Sum {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) {
      auto c = b.i_csc(turns(j, k));
      return c * c;
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(-(k * k - 1), 3));
  }
};

struct Sec2Sum {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) {
      auto s = b.sec(turns(j, k));
      return s * s;
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(k * k - 1));
  }
};

struct EisensteinCotSin {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a);
    return sum_j(b, 1, k, [&](long j) { return b.i_cot(turns(j, 2 * k)) * b.i_sin(turns(a * j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return b.rational(q(-(get(p.k) - 2 * get(p.a))));
  }
};

struct TanSin {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a);
    return sum_j(b, 1, k, [&](long j) { return b.i_tan(turns(j, 2 * k)) * b.i_sin(turns(a * j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long sign = get(p.a) % 2 == 1 ? 1 : -1;  // (-1)^{a+1}
    return b.rational(q(-sign * get(p.k)));
  }
};

struct SinCsc {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a);
    return sum_j(b, 1, k, [&](long j) { return b.i_sin(turns(a * j, k)) * b.i_csc(turns(j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a);
    return b.rational(q(-(a % 2 == 1 ? k - a : -a)));
  }
};

struct TanCsc {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) { return b.i_tan(turns(j, 2 * k)) * b.i_csc(turns(j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(-(k * k - 1), 2));
  }
};

struct CotCsc {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) { return b.i_cot(turns(j, 2 * k)) * b.i_csc(turns(j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(-(k * k - 1), 6));
  }
};

struct Tan4Sum {
  // The j = 0 term of the stated sum is tan^4(0) = 0.
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return sum_j(b, 1, k, [&](long j) {
      auto t = b.i_tan(turns(j, 2 * k));
      t *= t;
      return t * t;
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return b.rational(q(k * (k - 1) * (k * k + k - 3), 3));
  }
};

mpq_class central_binomial_over_4a(long k, long a) {
  mpq_class r(binomial(2 * a, a) * k, mpz_class(1) << (2 * a));
  r.canonicalize();
  return r;
}

template <bool kCosine>
struct PowerSum {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a), bb = get(p.b);
    const mpq_class x = get_x(p);
    return sum_j(b, 0, k, [&](long j) {
      const mpq_class t = turns(bb * j, 2 * k) + x;
      return integer_power(b, kCosine ? b.cos_sq(t) : b.sin_sq(t), a);
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return b.rational(central_binomial_over_4a(get(p.k), get(p.a)));
  }
};

struct BinomSquare {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a);
    mpz_class s = 0;
    for (long m = 0; m <= a; ++m) s += binomial(a, m) * binomial(a, m);
    return b.rational(mpq_class(s));
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a);
    return b.rational(mpq_class(binomial(2 * a, a)));
  }
};

struct BinomAlt {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a);
    mpz_class s = 0;
    for (long m = 0; m <= a; ++m) {
      const mpz_class term = (mpz_class(1) << (2 * (a - m))) * binomial(2 * m, m) * binomial(a, m);
      if (m % 2 == 0) s += term; else s -= term;
    }
    return b.rational(mpq_class(s));
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a);
    return b.rational(mpq_class(binomial(2 * a, a)));
  }
};

Applicability any_k(long k) { return require(k >= 2, "k must be at least 2"); }

std::vector<Binding> a_below_k(long k) {
  std::vector<Binding> out;
  for (long a = 1; a < k; ++a) out.push_back({IdentityParams{k, a}, SweepTag::kPrimitiveOnly});
  return out;
}

Applicability a_in_open_range(const IdentityParams& p) {
  if (!p.a) return Applicability::no("parameter a is required");
  return require(*p.a > 0 && *p.a < *p.k, "a must satisfy 0 < a < k");
}

IdentityRecord k_only(std::string id, std::string anchor, std::string statement,
                      std::function<Applicability(long)> k_rule) {
  IdentityRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.statement = std::move(statement);
  r.hypotheses = k_rule(2).ok && k_rule(3).ok ? "k >= 2" : "k odd";
  r.applicable_for_k = k_rule;
  r.applicable = [k_rule](const IdentityParams& p) {
    if (!p.k) return Applicability::no("parameter k is required");
    return k_rule(*p.k);
  };
  r.i_power = [](const IdentityParams&) { return 2; };
  r.field_order = [](const IdentityParams& p) { return get(p.k); };
  r.sweep_domain = [k_rule](long k, bool) {
    return k_rule(k) ? just_k(k) : std::vector<Binding>{};
  };
  return r;
}

IdentityRecord k_and_a(std::string id, std::string anchor, std::string statement,
                       std::function<Applicability(long)> k_rule) {
  IdentityRecord r = k_only(std::move(id), std::move(anchor), std::move(statement), k_rule);
  r.params.a = true;
  r.hypotheses += ", 0 < a < k";
  r.applicable = [k_rule](const IdentityParams& p) {
    if (!p.k) return Applicability::no("parameter k is required");
    if (auto ok = k_rule(*p.k); !ok) return ok;
    return a_in_open_range(p);
  };
  r.sweep_domain = [k_rule](long k, bool) {
    return k_rule(k) ? a_below_k(k) : std::vector<Binding>{};
  };
  return r;
}

template <bool kCosine>
IdentityRecord power_sum_record() {
  IdentityRecord r;
  r.id = kCosine ? "cos_power_sum" : "sin_power_sum";
  r.anchor = kCosine ? "even cosine power sum (cosine form of the sine-power lemma)"
                     : "even sine power sum lemma, k/4^a * C(2a, a)";
  r.statement = kCosine ? "sum_{j=0}^{k-1} cos^{2a}(b pi j/k + x) = k C(2a,a) / 4^a"
                        : "sum_{j=0}^{k-1} sin^{2a}(b pi j/k + x) = k C(2a,a) / 4^a";
  r.hypotheses = "a, b >= 1, ab < k, x any real (rational multiple of 2 pi on the exact backend)";
  r.params.a = r.params.b = r.params.x = true;
  r.applicable_for_k = [](long k) { return require(k >= 2, "k must be at least 2"); };
  r.applicable = [](const IdentityParams& p) {
    if (!p.k || !p.a || !p.b) return Applicability::no("parameters k, a, b are required");
    return require(*p.a >= 1 && *p.b >= 1 && *p.a * *p.b < *p.k, "a, b must satisfy 0 < ab < k");
  };
  r.i_power = [](const IdentityParams&) { return 0; };
  r.field_order = [](const IdentityParams& p) { return field_with_x(get(p.k), get_x(p), 2); };
  r.sweep_domain = [](long k, bool) {
    std::vector<Binding> out;
    if (k < 2) return out;
    for (long a = 1; a <= 6; ++a)
      for (long b = 1; a * b < k; ++b)
        for (const auto& x : x_samples())
          out.push_back({IdentityParams{k, a, b, x}, SweepTag::kPrimitiveOnly});
    return out;
  };
  return with_evaluators<PowerSum<kCosine>>(std::move(r));
}

IdentityRecord binomial_record(std::string id, std::string anchor, std::string statement) {
  IdentityRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.statement = std::move(statement);
  r.hypotheses = "a >= 1";
  r.params.k = false;
  r.params.a = true;
  r.k_independent = true;
  r.applicable_for_k = [](long) { return Applicability::yes(); };
  r.applicable = [](const IdentityParams& p) {
    if (!p.a) return Applicability::no("parameter a is required");
    return require(*p.a >= 1, "a must be a positive integer");
  };
  r.i_power = [](const IdentityParams&) { return 0; };
  r.field_order = [](const IdentityParams&) { return 1L; };
  r.sweep_domain = [](long, bool) {
    std::vector<Binding> out;
    for (long a = 1; a <= 20; ++a) {
      IdentityParams p;
      p.a = a;
      out.push_back({p, SweepTag::kPrimitiveOnly});
    }
    return out;
  };
  return r;
}

}  // namespace

long field_with_x(long k, const mpq_class& x, long scale) {
  mpq_class scaled = x * scale;
  return std::lcm(k, scaled.get_den().get_si());
}

Applicability require(bool condition, const std::string& reason) {
  return condition ? Applicability::yes() : Applicability::no(reason);
}

Applicability odd_k(long k) { return require(k >= 1 && k % 2 == 1, "k must be odd"); }

std::vector<IdentityRecord> plain_identities() {
  std::vector<IdentityRecord> out;
  out.push_back(with_evaluators<SternTan2>(
      k_only("stern_tan2", "Stern (1861) tangent-square sum",
             "sum_{j=1}^{k-1} tan^2(pi j/k) = k^2 - k", odd_k)));
  out.push_back(with_evaluators<Cot2Sum>(
      k_only("cot2_sum", "cotangent-square companion sum",
             "sum_{j=1}^{k-1} cot^2(pi j/k) = (k-1)(k-2)/3", any_k)));
  out.push_back(with_evaluators<Csc2Sum>(
      k_only("csc2_sum", "cosecant-square companion sum via csc 2t = (tan t + cot t)/2",
             "sum_{j=1}^{k-1} csc^2(2 pi j/k) = (k^2 - 1)/3", odd_k)));
  IdentityRecord sec2 = k_only("sec2_sum", "secant-square companion sum via sec^2 = 1 + tan^2",
                               "sum_{j=1}^{k-1} sec^2(2 pi j/k) = k^2 - 1", odd_k);
  sec2.i_power = [](const IdentityParams&) { return 0; };
  out.push_back(with_evaluators<Sec2Sum>(std::move(sec2)));
  out.push_back(with_evaluators<EisensteinCotSin>(
      k_and_a("eisenstein_cot_sin", "Eisenstein cotangent-sine sum",
              "sum_{j=1}^{k-1} cot(pi j/k) sin(2 pi a j/k) = k - 2a", any_k)));
  out.push_back(with_evaluators<TanSin>(
      k_and_a("tan_sin", "tangent sibling of the Eisenstein sum",
              "sum_{j=1}^{k-1} tan(pi j/k) sin(2 pi a j/k) = (-1)^{a+1} k", odd_k)));
  out.push_back(with_evaluators<SinCsc>(
      k_and_a("sin_csc", "sine-cosecant sibling of the Eisenstein sum",
              "sum_{j=1}^{k-1} sin(2 pi a j/k) csc(2 pi j/k) = k - a (a odd), -a (a even)",
              odd_k)));
  out.push_back(with_evaluators<TanCsc>(
      k_only("tan_csc", "tangent-cosecant sibling of the Eisenstein sum",
             "sum_{j=1}^{k-1} tan(pi j/k) csc(2 pi j/k) = (k^2 - 1)/2", odd_k)));
  out.push_back(with_evaluators<CotCsc>(
      k_only("cot_csc", "cotangent-cosecant sibling of the Eisenstein sum",
             "sum_{j=1}^{k-1} cot(pi j/k) csc(2 pi j/k) = (k^2 - 1)/6", odd_k)));
  IdentityRecord tan4 = k_only("tan4_sum", "fourth-power tangent sum by double convolution",
                               "sum_{j=0}^{k-1} tan^4(pi j/k) = k(k-1)(k^2+k-3)/3", odd_k);
  tan4.i_power = [](const IdentityParams&) { return 0; };
  out.push_back(with_evaluators<Tan4Sum>(std::move(tan4)));
  out.push_back(power_sum_record<false>());
  out.push_back(power_sum_record<true>());
  out.push_back(with_evaluators<BinomSquare>(
      binomial_record("binom_square", "sum of squared binomials from the sine-power convolution",
                      "sum_{m=0}^{a} C(a,m)^2 = C(2a,a)")));
  out.push_back(with_evaluators<BinomAlt>(
      binomial_record("binom_alt", "alternating central-binomial sum from cos^{2a} = (1 - sin^2)^a",
                      "sum_{m=0}^{a} (-1)^m 4^{a-m} C(2m,m) C(a,m) = C(2a,a)")));
  return out;
}

}  // namespace trigsum::detail
