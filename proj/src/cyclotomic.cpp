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
#include "trigsum/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "trigsum/error.hpp"
#include "trigsum/number_theory.hpp"

namespace trigsum {
namespace detail {

struct CycloField {
  long modulus = 1;
  long degree = 1;
  std::vector<mpz_class> phi;                      // monic, length degree + 1
  std::vector<std::pair<long, mpz_class>> sparse;  // nonzero phi[j], j < degree

  mutable std::mutex power_mutex;
  mutable std::unordered_map<long, std::vector<mpz_class>> powers;  // w^m, m >= degree
};

}  // namespace detail

namespace {

using Poly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<long, std::shared_ptr<const detail::CycloField>>& registry() {
  static std::map<long, std::shared_ptr<const detail::CycloField>> r;
  return r;
}

// Exact quotient of a by the monic polynomial b.
Poly divide_exact(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  Poly q(a.size() - db);
  for (size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::shared_ptr<const detail::CycloField> field_for(long k);

Poly compute_cyclotomic(long k) {
  Poly numerator(k + 1);
  numerator[0] = -1;
  numerator[k] = 1;
  Poly denominator{1};
  for (long d : divisors(k)) {
    if (d == k) break;
    denominator = multiply(denominator, field_for(d)->phi);
  }
  return divide_exact(std::move(numerator), denominator);
}

std::shared_ptr<const detail::CycloField> field_for(long k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "cyclotomic modulus must be positive");
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(k);
    if (it != registry().end()) return it->second;
  }
  auto field = std::make_shared<detail::CycloField>();
  field->modulus = k;
  field->phi = compute_cyclotomic(k);
  field->degree = static_cast<long>(field->phi.size()) - 1;
  for (long j = 0; j < field->degree; ++j)
    if (field->phi[j] != 0) field->sparse.emplace_back(j, field->phi[j]);
  std::lock_guard lock(registry_mutex());
  return registry().emplace(k, std::move(field)).first->second;
}

// In-place remainder modulo the field polynomial; p must already have length
// below 2k after folding. Works for integer and rational coefficients.
template <class Coeffs>
void reduce_in_place(Coeffs& p, const detail::CycloField& f) {
  const long k = f.modulus;
  if (static_cast<long>(p.size()) > k) {
    for (size_t i = k; i < p.size(); ++i) p[i % k] += p[i];
    p.resize(k);
  }
  for (long i = static_cast<long>(p.size()) - 1; i >= f.degree; --i) {
    if (p[i] == 0) continue;
    const auto c = p[i];
    for (const auto& [j, v] : f.sparse) p[i - f.degree + j] -= c * v;
    p[i] = 0;
  }
  p.resize(f.degree);
}

const std::vector<mpz_class>& reduced_power(const detail::CycloField& f, long m) {
  std::lock_guard lock(f.power_mutex);
  auto it = f.powers.find(m);
  if (it != f.powers.end()) return it->second;
  Poly p(m + 1);
  p[m] = 1;
  reduce_in_place(p, f);
  return f.powers.emplace(m, std::move(p)).first->second;
}

mpz_class common_denominator(const QPoly& p) {
  mpz_class d = 1;
  for (const auto& c : p)
    if (c != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by nonzero b over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - db);
  const mpq_class lead = b.back();
  for (size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i] / lead;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  return {q, a};
}

QPoly poly_sub_mul(const QPoly& s0, const QPoly& q, const QPoly& s1) {
  QPoly r(std::max(s0.size(), q.empty() || s1.empty() ? 0 : q.size() + s1.size() - 1));
  for (size_t i = 0; i < s0.size(); ++i) r[i] = s0[i];
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (size_t j = 0; j < s1.size(); ++j) r[i + j] -= q[i] * s1[j];
  }
  trim(r);
  return r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long k) { return field_for(k)->phi; }

CycloNumber::CycloNumber(long modulus) : field_(field_for(modulus)), coeffs_(field_->degree) {}

CycloNumber::CycloNumber(long modulus, const std::vector<mpq_class>& poly)
    : field_(field_for(modulus)), coeffs_(poly) {
  if (coeffs_.empty()) coeffs_.resize(1);
  for (auto& c : coeffs_) c.canonicalize();
  reduce_in_place(coeffs_, *field_);
}

CycloNumber CycloNumber::rational(long modulus, const mpq_class& value) {
  CycloNumber r(modulus);
  r.coeffs_[0] = value;
  r.coeffs_[0].canonicalize();
  return r;
}

long CycloNumber::modulus() const { return field_->modulus; }
long CycloNumber::degree() const { return field_->degree; }

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycloNumber::require_same_field(const CycloNumber& other) const {
  if (field_->modulus != other.field_->modulus)
    throw Error(ErrorCode::kModulusMismatch,
                "cyclotomic modulus mismatch: " + std::to_string(field_->modulus) + " vs " +
                    std::to_string(other.field_->modulus));
}

CycloNumber CycloNumber::conj() const {
  const long k = field_->modulus;
  QPoly p(k);
  p[0] = coeffs_[0];
  for (size_t i = 1; i < coeffs_.size(); ++i) p[k - i] = coeffs_[i];
  return CycloNumber(k, p);
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
  require_same_field(rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
  require_same_field(rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const mpq_class& rhs) {
  mpq_class factor = rhs;
  factor.canonicalize();
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
  require_same_field(rhs);
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  if (is_rational()) {
    const mpq_class scale = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    return *this *= scale;
  }
  // Integer product over a common denominator, then one canonicalization.
  const mpz_class da = common_denominator(coeffs_);
  const mpz_class db = common_denominator(rhs.coeffs_);
  std::vector<std::pair<size_t, mpz_class>> a;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) a.emplace_back(i, coeffs_[i].get_num() * (da / coeffs_[i].get_den()));
  std::vector<std::pair<size_t, mpz_class>> b;
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
    if (rhs.coeffs_[i] != 0)
      b.emplace_back(i, rhs.coeffs_[i].get_num() * (db / rhs.coeffs_[i].get_den()));
  Poly p(2 * coeffs_.size() - 1);
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) mpz_addmul(p[i + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  reduce_in_place(p, *field_);
  const mpz_class denominator = da * db;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = mpq_class(p[i], denominator);
    coeffs_[i].canonicalize();
  }
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& rhs) {
  require_same_field(rhs);
  return *this *= inverse(rhs);
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += i == 1 ? "w" : "w^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycloNumber inverse(const CycloNumber& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in cyclotomic field");
  const long k = a.modulus();
  if (a.is_rational()) return CycloNumber::rational(k, 1 / a.coeffs()[0]);
  const auto phi = cyclotomic_polynomial(k);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1 = a.coeffs();
  trim(r1);
  QPoly s0;
  QPoly s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus polynomial is irreducible.
  const mpq_class g = r0.front();
  for (auto& c : s0) c /= g;
  return CycloNumber(k, s0);
}

CycloNumber pow(CycloNumber base, unsigned long exponent) {
  CycloNumber result = CycloNumber::rational(base.modulus(), 1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

CycloNumber root_of_unity_power(long k, long j) {
  const auto field = field_for(k);
  const long m = mod(j, k);
  QPoly p(field->degree);
  if (m < field->degree) {
    p[m] = 1;
  } else {
    const auto& reduced = reduced_power(*field, m);
    for (size_t i = 0; i < p.size(); ++i) p[i] = reduced[i];
  }
  return CycloNumber(k, p);
}

ApproxComplex embed_complex(const CycloNumber& a, long precision_bits) {
  const long k = a.modulus();
  ApproxComplex sum(precision_bits);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const mpq_class& c = a.coeffs()[i];
    if (c == 0) continue;
    sum += ApproxComplex(c, precision_bits) * ApproxComplex::unit(turns(static_cast<long>(i), k), precision_bits);
  }
  return sum;
}

}  // namespace trigsum
