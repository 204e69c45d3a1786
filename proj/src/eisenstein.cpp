// Copyright 2026 The Metaplectic Compiler Authors
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

#include "metaplectic/eisenstein.hpp"

#include <cmath>

#include "metaplectic/error.hpp"

namespace metaplectic {

std::string EisensteinInt::to_string() const {
  return "[" + a.get_str() + "," + b.get_str() + "]";
}

BigComplex EisensteinInt::to_complex(long prec_bits) const {
  if (prec_bits <= 0) prec_bits = default_precision();
  BigFloat fa(a, prec_bits), fb(b, prec_bits);
  BigFloat s3 = sqrt(BigFloat(3.0, prec_bits));
  return {fa - ldexp(fb, -1), ldexp(fb * s3, -1)};
}

std::complex<double> EisensteinInt::to_complex_double() const {
  double fa = a.get_d(), fb = b.get_d();
  return {fa - fb / 2, fb * std::sqrt(3.0) / 2};
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a += o.a;
  b += o.b;
  return *this;
}
EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  *this = *this * o;
  return *this;
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a + y.a, x.b + y.b};
}
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a - y.a, x.b - y.b};
}
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // omega^2 = -1 - omega
  BigInt bd = x.b * y.b;
  return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}
EisensteinInt operator*(const EisensteinInt& x, const BigInt& s) { return {x.a * s, x.b * s}; }
bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
  return x.a == y.a && x.b == y.b;
}
std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) { return os << z.to_string(); }

EisensteinInt conj(const EisensteinInt& z) { return {z.a - z.b, -z.b}; }

BigInt norm(const EisensteinInt& z) { return z.a * z.a - z.a * z.b + z.b * z.b; }

EisensteinInt mul_unit(const EisensteinInt& z, long d) {
  d = ((d % 6) + 6) % 6;
  EisensteinInt r = z;
  for (long i = 0; i < d; ++i) r = {r.a - r.b, r.a};
  return r;
}

EisensteinInt unit_pow(long d) { return mul_unit(EisensteinInt(1), d); }

std::optional<int> unit_index(const EisensteinInt& z) {
  for (int d = 0; d < 6; ++d)
    if (unit_pow(d) == z) return d;
  return std::nullopt;
}

std::optional<EisensteinInt> divide_exact(const EisensteinInt& x, const EisensteinInt& y) {
  BigInt n = norm(y);
  if (n == 0) throw InputError("division by zero Eisenstein integer");
  EisensteinInt p = x * conj(y);
  if (!mpz_divisible_p(p.a.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(p.b.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  BigInt qa, qb;
  mpz_divexact(qa.get_mpz_t(), p.a.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), p.b.get_mpz_t(), n.get_mpz_t());
  return EisensteinInt(qa, qb);
}

std::optional<EisensteinInt> divide_by_sqrt_minus3(const EisensteinInt& z) {
  // z * conj(1+2w) / 3 with conj(1+2w) = -1 - 2w.
  EisensteinInt p = z * EisensteinInt(-1, -2);
  if (!mpz_divisible_ui_p(p.a.get_mpz_t(), 3) || !mpz_divisible_ui_p(p.b.get_mpz_t(), 3))
    return std::nullopt;
  BigInt qa, qb;
  mpz_divexact_ui(qa.get_mpz_t(), p.a.get_mpz_t(), 3);
  mpz_divexact_ui(qb.get_mpz_t(), p.b.get_mpz_t(), 3);
  return EisensteinInt(qa, qb);
}

namespace {

// Nearest integer to p/n (n > 0), ties toward zero.
BigInt round_div(const BigInt& p, const BigInt& n) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), n.get_mpz_t());
  BigInt twice = 2 * r;
  if (twice > n) {
    q += 1;
  } else if (twice == n && q < 0) {
    // exact tie at q + 1/2: toward zero means q + 1 when q + 1/2 < 0
    q += 1;
  }
  return q;
}

}  // namespace

std::pair<EisensteinInt, EisensteinInt> div_round(const EisensteinInt& x,
                                                   const EisensteinInt& y) {
  BigInt n = norm(y);
  if (n == 0) throw InputError("division by zero Eisenstein integer");
  EisensteinInt p = x * conj(y);
  EisensteinInt q(round_div(p.a, n), round_div(p.b, n));
  return {q, x - q * y};
}

EisensteinInt canonical_associate(const EisensteinInt& z) {
  if (z.is_zero()) return z;
  EisensteinInt r = z;
  for (int d = 0; d < 6; ++d) {
    if (r.a > r.b && r.b >= 0) return r;
    r = mul_unit(r, 1);
  }
  throw InvariantViolation("no canonical associate found for " + z.to_string());
}

EisensteinInt gcd(const EisensteinInt& x, const EisensteinInt& y) {
  if (x.is_zero() && y.is_zero()) throw InputError("gcd of two zeros is undefined");
  EisensteinInt p = x, q = y;
  while (!q.is_zero()) {
    auto [quot, rem] = div_round(p, q);
    (void)quot;
    METAPLECTIC_CHECK(norm(rem) < norm(q), "Euclidean remainder did not shrink");
    p = std::move(q);
    q = std::move(rem);
  }
  return canonical_associate(p);
}

Residue3 residue(const EisensteinInt& z) {
  return {static_cast<int>(mpz_fdiv_ui(z.a.get_mpz_t(), 3)),
          static_cast<int>(mpz_fdiv_ui(z.b.get_mpz_t(), 3))};
}

Residue3 operator+(Residue3 x, Residue3 y) { return {(x.a + y.a) % 3, (x.b + y.b) % 3}; }

Residue3 operator*(Residue3 x, Residue3 y) {
  int bd = x.b * y.b;
  return {((x.a * y.a - bd) % 3 + 3) % 3, ((x.a * y.b + x.b * y.a - bd) % 3 + 3) % 3};
}

Residue3 mul_unit(Residue3 x, long d) {
  d = ((d % 6) + 6) % 6;
  for (long i = 0; i < d; ++i) x = {(x.a - x.b + 3) % 3, x.a};
  return x;
}

int reduced_norm(Residue3 x) { return (x.a * x.a - x.a * x.b + x.b * x.b + 9) % 3; }

Orbit orbit_of(Residue3 r) {
  if (r.a == 0 && r.b == 0) return Orbit::O0;
  if ((r.a == 1 && r.b == 2) || (r.a == 2 && r.b == 1)) return Orbit::O2;
  return Orbit::O1;
}

std::optional<int> unit_exponent_matching(Residue3 x, Residue3 y) {
  for (int d = 0; d < 6; ++d)
    if (mul_unit(y, d) == x) return d;
  return std::nullopt;
}

}  // namespace metaplectic
