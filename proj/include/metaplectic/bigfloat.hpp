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

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace metaplectic {

using BigInt = mpz_class;

/// Working precision (bits) used by default-constructed BigFloat values on the
/// calling thread. Starts at 128.
long default_precision();
void set_default_precision(long bits);

/// Sets the calling thread's default precision for the guard's lifetime.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(long bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  long saved_;
};

/// RAII owner of an MPFR value. Binary operations produce a result whose
/// precision is the larger of the operand precisions.
class BigFloat {
 public:
  BigFloat();
  BigFloat(double v);  // NOLINT(google-explicit-constructor)
  BigFloat(long v);    // NOLINT(google-explicit-constructor)
  BigFloat(int v) : BigFloat(static_cast<long>(v)) {}  // NOLINT
  explicit BigFloat(const BigInt& v);
  BigFloat(double v, long prec_bits);
  BigFloat(const BigInt& v, long prec_bits);

  /// Parses a decimal string; throws InputError on malformed text.
  static BigFloat parse(std::string_view text, long prec_bits);
  static BigFloat pi(long prec_bits);
  /// Zero carrying the given precision.
  static BigFloat zero(long prec_bits);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  /// Decimal representation with `digits` significant digits (0 = enough to
  /// round-trip the precision).
  std::string to_string(int digits = 0) const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

 private:
  struct NoInit {};
  explicit BigFloat(NoInit, long prec_bits);
  mpfr_t v_;
  friend BigFloat make_result(const BigFloat& a, const BigFloat& b);
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);

int compare(const BigFloat& a, const BigFloat& b);
inline bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
/// x * 2^e
BigFloat ldexp(const BigFloat& x, long e);
BigInt floor_to_int(const BigFloat& x);
BigInt ceil_to_int(const BigFloat& x);
/// sqrt(3)^k as a BigFloat of the given precision.
BigFloat sqrt3_pow(long k, long prec_bits);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

/// Complex number over BigFloat.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(double r) : re(r), im(0.0) {}  // NOLINT(google-explicit-constructor)
  explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}
  BigComplex(std::complex<double> z, long prec_bits)
      : re(z.real(), prec_bits), im(z.imag(), prec_bits) {}

  static BigComplex zero(long prec_bits) {
    return {BigFloat::zero(prec_bits), BigFloat::zero(prec_bits)};
  }
  /// e^{i theta}
  static BigComplex polar(const BigFloat& theta);

  long precision() const { return std::max(re.precision(), im.precision()); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex operator-() const { return {-re, -im}; }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& s);
BigComplex operator/(const BigComplex& a, const BigFloat& s);
BigComplex conj(const BigComplex& z);
/// |z|^2
BigFloat norm(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace metaplectic
