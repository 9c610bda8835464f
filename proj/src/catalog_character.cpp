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
#include <numeric>

#include "catalog_internal.hpp"

namespace trigsum::detail {
namespace {

template <class B, class F>
typename B::Scalar chi_sum(const B& b, const Character& chi, F&& term) {
  auto acc = b.zero();
  for (long j = 1; j < chi.modulus(); ++j) {
    const int c = chi.real_value(j);
    if (c == 0) continue;
    if (c > 0) acc += term(j); else acc -= term(j);
  }
  return acc;
}

template <class B>
typename B::Scalar q(const B& b, const mpq_class& v) { return b.rational(v); }

// S = i sqrt(k), the Gauss sum of the character.
template <class B>
typename B::Scalar root(const IdentityParams& p, const B& b) { return b.i_sqrt(get(p.k)); }

long chi_of(const IdentityParams& p, long n) { return character_for(p).real_value(n); }

long h_of(const IdentityParams& p) { return class_number_h(get(p.k)); }

struct CharSinPower {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a), bb = get(p.b);
    const mpq_class x = get_x(p);
    return chi_sum(b, character_for(p), [&](long j) {
      return integer_power(b, b.i_sin(turns(bb * j, k) + x), a);
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a), bb = get(p.b), half = (a - 1) / 2;
    const mpq_class x = get_x(p);
    auto acc = b.zero();
    for (long m = 0; m <= half; ++m) {
      const long n = a - 2 * m;
      const long c = chi_of(p, bb * n);
      if (c == 0) continue;
      mpq_class coeff(binomial(a, m) * c);
      if ((half - m) % 2 == 1) coeff = -coeff;
      acc += b.cos(n * x) * q(b, coeff);
    }
    mpq_class scale(1, mpz_class(1) << (a - 1));
    if (half % 2 == 1) scale = -scale;
    return acc * q(b, scale) * root(p, b);
  }
};

struct CharCosPower {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a), bb = get(p.b);
    const mpq_class x = get_x(p);
    return chi_sum(b, character_for(p), [&](long j) {
      return integer_power(b, b.cos(turns(bb * j, k) + x), a);
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a), bb = get(p.b);
    const mpq_class x = get_x(p);
    auto acc = b.zero();
    for (long m = 0; m <= (a - 1) / 2; ++m) {
      const long n = a - 2 * m;
      const long c = chi_of(p, bb * n);
      if (c == 0) continue;
      acc += b.i_sin(n * x) * q(b, mpq_class(binomial(a, m) * c));
    }
    return acc * q(b, mpq_class(1, mpz_class(1) << (a - 1))) * root(p, b);
  }
};

struct CharSin {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), bb = get(p.b);
    return chi_sum(b, character_for(p), [&](long j) { return b.i_sin(turns(bb * j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, chi_of(p, get(p.b))) * root(p, b);
  }
};

struct BzCot {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) { return b.i_cot(turns(j, 2 * k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, 2 * h_of(p)) * root(p, b);
  }
};

struct BzCotB {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), bb = get(p.b);
    return chi_sum(b, character_for(p), [&](long j) { return b.i_cot(turns(j * bb, 2 * k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, 2 * chi_of(p, get(p.b)) * h_of(p)) * root(p, b);
  }
};

struct BzTan {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) { return b.i_tan(turns(j, 2 * k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, (2 - 4 * chi_of(p, 2)) * h_of(p)) * root(p, b);
  }
};

struct BzCsc {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) { return b.i_csc(turns(j, k)); });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, 2 * (1 - chi_of(p, 2)) * h_of(p)) * root(p, b);
  }
};

struct BzCotCosPower {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a);
    return chi_sum(b, character_for(p), [&](long j) {
      return b.i_cot(turns(j, 2 * k)) * integer_power(b, b.cos_sq(turns(j, 2 * k)), (a - 1) / 2);
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a), total = (a - 1) / 2;
    mpz_class inner = 0;
    for (long n = 1; n <= total; ++n)
      for (long m = 0; n + 2 * m <= total; ++m)
        inner += chi_of(p, n) * binomial(a + 1, total - n - 2 * m);
    mpq_class value = mpq_class(h_of(p)) - mpq_class(inner, mpz_class(1) << (a - 1));
    value.canonicalize();
    return q(b, 2 * value) * root(p, b);
  }
};

struct BzCotCos {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), bb = get(p.b);
    return chi_sum(b, character_for(p), [&](long j) {
      return b.i_cot(turns(j, 2 * k)) * b.cos(turns(bb * j, k));
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long bb = get(p.b);
    long partial = 0;
    for (long n = 1; n < bb; ++n) partial += chi_of(p, n);
    return q(b, 2 * h_of(p) - chi_of(p, bb) - 2 * partial) * root(p, b);
  }
};

struct Cot2Sin {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k), a = get(p.a);
    return chi_sum(b, character_for(p), [&](long j) {
      auto c = b.i_cot(turns(j, 2 * k));
      return -(c * c) * b.i_sin(turns(a * j, k));
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    const long a = get(p.a);
    long weighted = 0;
    for (long m = 1; m < a; ++m) weighted += chi_of(p, m) * (a - m);
    return q(b, 4 * a * h_of(p) - chi_of(p, a) - 4 * weighted) * root(p, b);
  }
};

struct Sin2OverSin4 {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) {
      return b.sin_sq(turns(j, 2 * k)) * b.i_csc(turns(2 * j, k));
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, mpq_class(3 * (chi_of(p, 2) - 1) * h_of(p), 2)) * root(p, b);
  }
};

struct Sin2Cot {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) {
      return b.sin_sq(turns(j, 2 * k)) * b.i_cot(turns(j, 2 * k));
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, mpq_class(1, 2)) * root(p, b);
  }
};

struct Sin2Tan {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) {
      return b.sin_sq(turns(j, 2 * k)) * b.i_tan(turns(j, 2 * k));
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, mpq_class(-1, 2) + (2 - 4 * chi_of(p, 2)) * h_of(p)) * root(p, b);
  }
};

struct Sin2Tan2 {
  template <class B> static auto lhs(const IdentityParams& p, const B& b) {
    const long k = get(p.k);
    return chi_sum(b, character_for(p), [&](long j) {
      return b.sin_sq(turns(j, 2 * k)) * b.i_tan(turns(j, k));
    });
  }
  template <class B> static auto rhs(const IdentityParams& p, const B& b) {
    return q(b, mpq_class(-1, 2) + (chi_of(p, 2) - 2) * h_of(p)) * root(p, b);
  }
};

Applicability character_k(long k) {
  if (k < 7 || k % 2 == 0) return Applicability::no("character identities need odd k >= 7");
  if (!has_real_primitive_odd_character(k))
    return Applicability::no("no real primitive odd character mod " + std::to_string(k));
  return Applicability::yes();
}

Applicability character_binding(const IdentityParams& p, bool allow_imprimitive) {
  if (!p.k) return Applicability::no("parameter k is required");
  const long k = *p.k;
  if (!p.character_index) return character_k(k);
  if (k < 7 || k % 2 == 0) return Applicability::no("character identities need odd k >= 7");
  const auto& all = characters_mod(k);
  if (*p.character_index < 0 || *p.character_index >= static_cast<long>(all.size()))
    return Applicability::no("character index out of range for k = " + std::to_string(k));
  const Character& chi = all[*p.character_index];
  if (!chi.is_real() || !chi.is_odd() || chi.is_principal())
    return Applicability::no("character must be real, odd and nonprincipal");
  if (!allow_imprimitive && !chi.is_primitive())
    return Applicability::no("character must be primitive");
  return Applicability::yes();
}

std::vector<long> imprimitive_probe_indices(long k) {
  std::vector<long> out;
  if (k < 7 || k % 2 == 0) return out;
  const auto& all = characters_mod(k);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Character& chi = all[i];
    if (chi.is_real() && chi.is_odd() && !chi.is_principal() && !chi.is_primitive())
      out.push_back(static_cast<long>(i));
  }
  return out;
}

using ParamRule = std::function<Applicability(const IdentityParams&)>;
using Domain = std::function<std::vector<IdentityParams>(long k)>;

struct Spec {
  const char* id;
  const char* anchor;
  const char* statement;
  const char* hypotheses;
  ParamSchema schema;
  bool probes = false;
  ParamRule rule;
  Domain domain;
  std::function<long(const IdentityParams&)> field;
};

template <class Entry>
IdentityRecord make(Spec s) {
  IdentityRecord r;
  r.id = s.id;
  r.anchor = s.anchor;
  r.statement = s.statement;
  r.hypotheses = s.hypotheses;
  r.params = s.schema;
  r.params.character = true;
  r.applicable_for_k = character_k;
  const bool allow = s.probes;
  r.applicable = [allow, rule = s.rule](const IdentityParams& p) {
    if (auto ok = character_binding(p, allow); !ok) return ok;
    return rule ? rule(p) : Applicability::yes();
  };
  r.i_power = [](const IdentityParams&) { return 1; };
  r.field_order = s.field ? s.field : [](const IdentityParams& p) { return get(p.k); };
  r.sweep_domain = [allow, domain = s.domain](long k, bool probes) {
    std::vector<Binding> out;
    const auto bindings = domain ? domain(k) : std::vector<IdentityParams>{IdentityParams{k}};
    if (character_k(k))
      for (const auto& p : bindings) out.push_back({p, SweepTag::kPrimitiveOnly});
    if (allow && probes)
      for (long idx : imprimitive_probe_indices(k))
        for (auto p : bindings) {
          p.character_index = idx;
          out.push_back({p, SweepTag::kImprimitiveProbe});
        }
    return out;
  };
  return with_evaluators<Entry>(std::move(r));
}

ParamSchema with_a() { ParamSchema s; s.a = true; return s; }
ParamSchema with_b() { ParamSchema s; s.b = true; return s; }
ParamSchema with_abx() { ParamSchema s; s.a = s.b = s.x = true; return s; }

Applicability odd_power_rule(const IdentityParams& p) {
  if (!p.a || !p.b) return Applicability::no("parameters a and b are required");
  if (*p.a < 1 || *p.a % 2 == 0) return Applicability::no("a must be odd and positive");
  return require(*p.b >= 1 && *p.a * *p.b < *p.k, "a, b must satisfy 1 <= ab < k");
}

std::vector<IdentityParams> odd_power_domain(long k) {
  std::vector<IdentityParams> out;
  for (long a : {1L, 3L, 5L})
    for (long b = 1; a * b < k; ++b)
      for (const auto& x : x_samples()) out.push_back(IdentityParams{k, a, b, x});
  return out;
}

std::vector<IdentityParams> a_domain(long from, long to, long k) {
  std::vector<IdentityParams> out;
  for (long a = from; a <= to; ++a) out.push_back(IdentityParams{k, a});
  return out;
}

std::vector<IdentityParams> b_domain(long k, const std::function<bool(long)>& keep) {
  std::vector<IdentityParams> out;
  for (long b = 1; b <= k; ++b)
    if (keep(b)) out.push_back(IdentityParams{k, std::nullopt, b});
  return out;
}

long x_field(const IdentityParams& p) { return field_with_x(get(p.k), get_x(p), 1); }

}  // namespace

std::vector<IdentityRecord> character_identities() {
  std::vector<IdentityRecord> out;
  out.push_back(make<CharSinPower>(
      {"char_sin_power", "character-weighted odd sine power sum",
       "sum_j chi(j) sin^a(2 pi b j/k + x) = (-1)^{(a-1)/2} sqrt(k)/2^{a-1} "
       "sum_{m <= (a-1)/2} (-1)^m C(a,m) cos((a-2m)x) chi(b(a-2m))",
       "a odd, 1 <= ab < k, chi real primitive odd", with_abx(), true, odd_power_rule,
       odd_power_domain, x_field}));
  out.back().i_power = [](const IdentityParams& p) { return static_cast<int>(get(p.a) % 4); };
  out.push_back(make<CharCosPower>(
      {"char_cos_power", "character-weighted odd cosine power sum",
       "sum_j chi(j) cos^a(2 pi b j/k + x) = -sqrt(k)/2^{a-1} "
       "sum_{m <= (a-1)/2} C(a,m) sin((a-2m)x) chi(b(a-2m))",
       "a odd, 1 <= ab < k, chi real primitive odd", with_abx(), true, odd_power_rule,
       odd_power_domain, x_field}));
  out.back().i_power = [](const IdentityParams&) { return 0; };
  out.push_back(make<CharSin>(
      {"char_sin", "Gauss sum evaluation for a real primitive odd character",
       "sum_j chi(j) sin(2 pi b j/k) = chi(b) sqrt(k)", "b >= 1, k does not divide b",
       with_b(), true,
       [](const IdentityParams& p) {
         if (!p.b) return Applicability::no("parameter b is required");
         return require(*p.b >= 1 && *p.b % *p.k != 0, "b must be positive and not divisible by k");
       },
       [](long k) { return b_domain(k, [k](long b) { return b < k; }); }, nullptr}));
  out.push_back(make<BzCot>(
      {"bz_cot", "Berndt-Zaharescu cotangent class number formula",
       "sum_j chi(j) cot(pi j/k) = 2 h(-k) sqrt(k)", "chi real primitive odd", {}, false,
       nullptr, nullptr, nullptr}));
  out.push_back(make<BzCotB>(
      {"bz_cot_b", "cotangent class number formula with scaled argument",
       "sum_j chi(j) cot(pi j b/k) = 2 chi(b) h(-k) sqrt(k)", "gcd(b, k) = 1", with_b(), false,
       [](const IdentityParams& p) {
         if (!p.b) return Applicability::no("parameter b is required");
         return require(*p.b >= 1 && std::gcd(*p.b, *p.k) == 1, "b must be coprime to k");
       },
       [](long k) { return b_domain(k, [k](long b) { return b < k && std::gcd(b, k) == 1; }); },
       nullptr}));
  out.push_back(make<BzTan>(
      {"bz_tan", "Berndt-Zaharescu tangent class number formula",
       "sum_j chi(j) tan(pi j/k) = (2 - 4 chi(2)) h(-k) sqrt(k)", "chi real primitive odd", {},
       false, nullptr, nullptr, nullptr}));
  out.push_back(make<BzCsc>(
      {"bz_csc", "Berndt-Zaharescu cosecant class number formula",
       "sum_j chi(j) csc(2 pi j/k) = 2 (1 - chi(2)) h(-k) sqrt(k)", "chi real primitive odd", {},
       false, nullptr, nullptr, nullptr}));
  out.push_back(make<BzCotCosPower>(
      {"bz_cot_cospow", "cotangent times even cosine power, character weighted",
       "sum_j chi(j) cot(pi j/k) cos^{a-1}(pi j/k) = 2 sqrt(k) (h(-k) - 2^{1-a} "
       "sum_{n+2m+s=(a-1)/2} chi(n) C(a+1, s))",
       "a odd, a - 3 < 2k", with_a(), false,
       [](const IdentityParams& p) {
         if (!p.a) return Applicability::no("parameter a is required");
         return require(*p.a >= 1 && *p.a % 2 == 1 && *p.a - 3 < 2 * *p.k,
                        "a must be odd with 1 <= a < 2k + 3");
       },
       [](long k) {
         std::vector<IdentityParams> out;
         for (long a = 1; a <= std::min(2 * k + 2, 15L); a += 2) out.push_back(IdentityParams{k, a});
         return out;
       },
       nullptr}));
  out.push_back(make<BzCotCos>(
      {"bz_cot_cos", "cotangent-cosine sum from the character cotangent transform",
       "sum_j chi(j) cot(pi j/k) cos(2 pi b j/k) = sqrt(k) (2 h(-k) - chi(b) - 2 sum_{n<b} chi(n))",
       "1 <= b <= k", with_b(), false,
       [](const IdentityParams& p) {
         if (!p.b) return Applicability::no("parameter b is required");
         return require(*p.b >= 1 && *p.b <= *p.k, "b must satisfy 1 <= b <= k");
       },
       [](long k) { return b_domain(k, [](long) { return true; }); }, nullptr}));
  out.push_back(make<Cot2Sin>(
      {"cot2_sin", "cotangent-square sine sum from the squared cotangent transform",
       "sum_j chi(j) cot^2(pi j/k) sin(2 pi a j/k) = sqrt(k) (4 a h(-k) - chi(a) - "
       "4 sum_{m<a} chi(m)(a-m))",
       "0 <= a <= k", with_a(), false,
       [](const IdentityParams& p) {
         if (!p.a) return Applicability::no("parameter a is required");
         return require(*p.a >= 0 && *p.a <= *p.k, "a must satisfy 0 <= a <= k");
       },
       [](long k) { return a_domain(1, k - 1, k); }, nullptr}));
  out.push_back(make<Sin2OverSin4>(
      {"char_sin2_over_sin4", "sine-square over quadruple-angle sine, character weighted",
       "sum_j chi(j) sin^2(pi j/k) / sin(4 pi j/k) = (3/2)(chi(2) - 1) h(-k) sqrt(k)",
       "chi real primitive odd", {}, false, nullptr, nullptr, nullptr}));
  out.push_back(make<Sin2Cot>(
      {"char_sin2_cot", "sine-square cotangent sum, character weighted",
       "sum_j chi(j) sin^2(pi j/k) cot(pi j/k) = sqrt(k)/2", "chi real primitive odd", {}, false,
       nullptr, nullptr, nullptr}));
  out.push_back(make<Sin2Tan>(
      {"char_sin2_tan", "sine-square tangent sum, character weighted",
       "sum_j chi(j) sin^2(pi j/k) tan(pi j/k) = sqrt(k) (-1/2 + (2 - 4 chi(2)) h(-k))",
       "chi real primitive odd", {}, false, nullptr, nullptr, nullptr}));
  out.push_back(make<Sin2Tan2>(
      {"char_sin2_tan2", "sine-square double-angle tangent sum, character weighted",
       "sum_j chi(j) sin^2(pi j/k) tan(2 pi j/k) = sqrt(k) (-1/2 + (chi(2) - 2) h(-k))",
       "chi real primitive odd", {}, false, nullptr, nullptr, nullptr}));
  return out;
}

}  // namespace trigsum::detail
