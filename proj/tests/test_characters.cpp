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
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "trigsum/backends.hpp"
#include "trigsum/characters.hpp"
#include "trigsum/error.hpp"

namespace trigsum {
namespace {

using testing::Near;

long count_if_chars(long k, bool (*pred)(const Character&)) {
  long n = 0;
  for (const auto& chi : enumerate_characters(k)) n += pred(chi);
  return n;
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_characters(5).size(), 4u);
  EXPECT_EQ(enumerate_characters(12).size(), 4u);
  const auto mod7 = enumerate_characters(7);
  long real_nonprincipal = 0;
  for (const auto& chi : mod7) {
    if (chi.is_real() && !chi.is_principal()) {
      ++real_nonprincipal;
      EXPECT_TRUE(chi.is_odd());
    }
  }
  EXPECT_EQ(real_nonprincipal, 1);
}

TEST(Enumerate, StructuralInvariants) {
  std::mt19937_64 rng(1);
  for (long k = 1; k <= 200; ++k) {
    const auto chars = enumerate_characters(k);
    ASSERT_EQ(static_cast<long>(chars.size()), euler_phi(k)) << "k=" << k;
    EXPECT_TRUE(chars.front().is_principal());
    EXPECT_EQ(count_if_chars(k, [](const Character& c) { return c.is_principal(); }), 1);
    std::set<std::vector<long>> tables;
    for (const auto& chi : chars) tables.insert(chi.exponents());
    EXPECT_EQ(tables.size(), chars.size()) << "duplicate tables mod " << k;
    if (k > 60) continue;
    std::uniform_int_distribution<long> pick(0, 10 * k);
    for (const auto& chi : chars) {
      long total = 0;
      for (long n = 0; n < k; ++n) {
        EXPECT_EQ(chi.exponent(n) < 0, std::gcd(n, k) != 1);
        if (chi.exponent(n) >= 0) total = mod(total + chi.exponent(n), chi.order());
      }
      for (int trial = 0; trial < 200; ++trial) {
        const long a = pick(rng), b = pick(rng);
        const long ea = chi.exponent(a), eb = chi.exponent(b), eab = chi.exponent(a * b);
        if (ea < 0 || eb < 0) {
          EXPECT_LT(eab, 0);
        } else {
          EXPECT_EQ(eab, mod(ea + eb, chi.order()));
        }
      }
      if (!chi.is_principal() && k > 1) {
        const ExactBackend b(chi.order() == 1 ? 1 : chi.order());
        CycloNumber sum = b.zero();
        for (long n = 0; n < k; ++n) sum += chi.value(b, n);
        EXPECT_TRUE(sum.is_zero()) << "orthogonality mod " << k;
      }
      if (chi.is_real()) {
        for (long n = 0; n < k; ++n) EXPECT_LE(std::abs(chi.real_value(n)), 1);
        if (k > 2) EXPECT_EQ(chi.is_odd(), chi.real_value(k - 1) == -1);
        if (k > 2) EXPECT_EQ(chi.is_even(), chi.real_value(k - 1) == 1);
      }
    }
  }
}

TEST(Classify, Examples) {
  const auto principal = enumerate_characters(7).front();
  EXPECT_EQ(principal.conductor(), 1);
  EXPECT_FALSE(principal.is_primitive());
  const Character legendre = kronecker_character(7);
  EXPECT_TRUE(legendre.is_real());
  EXPECT_TRUE(legendre.is_odd());
  EXPECT_TRUE(legendre.is_primitive());
  EXPECT_EQ(legendre.conductor(), 7);
  bool found = false;
  for (const auto& chi : enumerate_characters(9)) {
    if (chi.is_real() && !chi.is_principal()) {
      EXPECT_EQ(chi.conductor(), 3);
      EXPECT_FALSE(chi.is_primitive());
      for (long n = 0; n < 9; ++n) EXPECT_EQ(chi.real_value(n), oracle::legendre_by_squares(n, 3));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Jacobi, Examples) {
  for (long k : {1L, 3L, 9L, 15L, 101L}) EXPECT_EQ(jacobi_symbol(1, k), 1);
  EXPECT_EQ(jacobi_symbol(2, 7), 1);
  EXPECT_EQ(jacobi_symbol(3, 7), -1);
  EXPECT_EQ(jacobi_symbol(14, 7), 0);
  EXPECT_THROW(jacobi_symbol(3, 8), Error);
  for (long p : {3L, 5L, 7L, 11L, 13L, 43L})
    for (long n = -20; n < 40; ++n) EXPECT_EQ(jacobi_symbol(n, p), oracle::legendre_by_squares(n, p));
}

TEST(Kronecker, TwoRule) {
  EXPECT_EQ(kronecker_character(7).real_value(2), 1);
  EXPECT_EQ(kronecker_character(11).real_value(2), -1);
  for (long k = 7; k <= 200; ++k) {
    if (!has_real_primitive_odd_character(k)) continue;
    const int expected = (k % 8 == 1 || k % 8 == 7) ? 1 : -1;
    EXPECT_EQ(kronecker_character(k).real_value(2), expected) << "k=" << k;
  }
}

TEST(Kronecker, MatchesEnumeration) {
  for (long k : {15L, 35L, 39L}) {
    const Character kron = kronecker_character(k);
    long matches = 0;
    for (const auto& chi : enumerate_characters(k)) {
      if (chi.is_real() && chi.is_odd() && chi.is_primitive()) {
        ++matches;
        for (long n = 0; n < k; ++n) EXPECT_EQ(chi.real_value(n), kron.real_value(n));
      }
    }
    EXPECT_EQ(matches, 1) << "k=" << k;
  }
  EXPECT_THROW(kronecker_character(9), Error);
  EXPECT_THROW(kronecker_character(3), Error);
}

TEST(GaussSum, Examples) {
  const Character chi = kronecker_character(7);
  const ExactBackend exact(14);
  EXPECT_TRUE(gauss_sum(0, chi, exact).is_zero());
  const FloatBackend flt(256);
  const ApproxComplex root7 = testing::imag_value("2.64575131106459059050161575363926042571025918308245018036833");
  EXPECT_TRUE(Near(gauss_sum(1, chi, flt), root7, 128));
  EXPECT_TRUE(Near(gauss_sum(3, chi, flt), -root7, 128));
  EXPECT_EQ(gauss_sum(3, chi, exact), -gauss_sum(1, chi, exact));
}

TEST(GaussSum, SeparabilityCharacterizesPrimitivity) {
  for (long k = 2; k <= 30; ++k) {
    for (const auto& chi : enumerate_characters(k)) {
      if (!chi.is_real()) continue;
      const ExactBackend b(lcm(k, chi.order()));
      const CycloNumber g1 = gauss_sum(1, chi, b);
      bool separable = true;
      for (long n = 0; n < k && separable; ++n)
        separable = gauss_sum(n, chi, b) == chi.value(b, n) * g1;
      EXPECT_EQ(separable, chi.is_primitive()) << "k=" << k;
    }
  }
}

TEST(ClassNumber, SpotValuesAndOracle) {
  EXPECT_EQ(class_number(7).h, 1);
  EXPECT_EQ(class_number(15).h, 2);
  EXPECT_EQ(class_number(23).h, 3);
  EXPECT_EQ(class_number(11).h, 1);
  for (long k = 7; k <= 200; ++k) {
    if (!has_real_primitive_odd_character(k)) continue;
    const ClassNumberResult r = class_number(k);
    EXPECT_EQ(r.via_weighted_sum, r.via_half_sum);
    EXPECT_EQ(r.via_weighted_sum, mpq_class(r.h));
    EXPECT_EQ(r.h, oracle::reduced_form_count(k)) << "k=" << k;
  }
}

TEST(ClassNumber, RefusesInvalidModuli) {
  for (long k : {3L, 9L, 13L, 8L}) {
    try {
      (void)class_number(k);
      FAIL() << "k=" << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotApplicable);
    }
  }
}

}  // namespace
}  // namespace trigsum
