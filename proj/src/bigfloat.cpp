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

#include "metaplectic/bigfloat.hpp"

#include <cctype>
#include <cmath>

#include "metaplectic/error.hpp"

namespace metaplectic {

namespace {
thread_local long g_default_precision = 128;
}

long default_precision() { return g_default_precision; }

void set_default_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20)
    throw InputError("precision out of range: " + std::to_string(bits));
  g_default_precision = bits;
}

ScopedPrecision::ScopedPrecision(long bits) : saved_(g_default_precision) {
  set_default_precision(bits);
}
ScopedPrecision::~ScopedPrecision() { g_default_precision = saved_; }

BigFloat::BigFloat(NoInit, long prec_bits) { mpfr_init2(v_, prec_bits); }

BigFloat::BigFloat() : BigFloat(NoInit{}, g_default_precision) {
  mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(double v) : BigFloat(NoInit{}, g_default_precision) {
  mpfr_set_d(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(long v) : BigFloat(NoInit{}, g_default_precision) {
  mpfr_set_si(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(const BigInt& v) : BigFloat(NoInit{}, g_default_precision) {
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
BigFloat::BigFloat(double v, long prec_bits) : BigFloat(NoInit{}, prec_bits) {
  mpfr_set_d(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(const BigInt& v, long prec_bits)
    : BigFloat(NoInit{}, prec_bits) {
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, long prec_bits) {
  BigFloat r(NoInit{}, prec_bits);
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == nullptr || *end != '\0' || end == s.c_str())
    throw InputError("not a decimal number: '" + s + "'");
  return r;
}

BigFloat BigFloat::pi(long prec_bits) {
  BigFloat r(NoInit{}, prec_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zero(long prec_bits) {
  BigFloat r(NoInit{}, prec_bits);
  mpfr_set_zero(r.v_, 1);
  return r;
}

BigFloat::BigFloat(const BigFloat& o) : BigFloat(NoInit{}, o.precision()) {
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& o) noexcept : BigFloat(NoInit{}, MPFR_PREC_MIN) {
  mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    if (precision() != o.precision()) mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat make_result(const BigFloat& a, const BigFloat& b) {
  return BigFloat(BigFloat::NoInit{}, std::max(a.precision(), b.precision()));
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(NoInit{}, precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result(a, b);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result(a, b);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result(a, b);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result(a, b);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }

namespace {
template <class F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r = BigFloat::zero(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r = make_result(y, x);
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r = BigFloat::zero(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigInt floor_to_int(const BigFloat& x) {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), x.get(), MPFR_RNDD);
  return r;
}

BigInt ceil_to_int(const BigFloat& x) {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), x.get(), MPFR_RNDU);
  return r;
}

BigFloat sqrt3_pow(long k, long prec_bits) {
  // sqrt(3)^k = 3^(k/2) * sqrt(3)^(k mod 2), with k possibly negative.
  BigFloat three(3.0, prec_bits);
  BigFloat r(1.0, prec_bits);
  long q = k / 2;
  long rem = k % 2;
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(q < 0 ? -q : q));
  BigFloat pf(p, prec_bits);
  r = q >= 0 ? pf : BigFloat(1.0, prec_bits) / pf;
  if (rem > 0) r *= sqrt(three);
  if (rem < 0) r /= sqrt(three);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(static_cast<int>(os.precision()));
}

BigComplex BigComplex::polar(const BigFloat& theta) { return {cos(theta), sin(theta)}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
BigComplex operator/(const BigComplex& a, const BigFloat& s) { return {a.re / s, a.im / s}; }
BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigFloat abs(const BigComplex& z) {
  BigFloat r = make_result(z.re, z.im);
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}
BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << "(" << z.re << ", " << z.im << ")";
}

}  // namespace metaplectic
