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

#include <optional>
#include <ostream>
#include <string>

#include "metaplectic/bigfloat.hpp"

namespace metaplectic {

/// a + b*omega with omega = exp(2*pi*i/3).
struct EisensteinInt {
  BigInt a;
  BigInt b;

  EisensteinInt() : a(0), b(0) {}
  EisensteinInt(long a_) : a(a_), b(0) {}  // NOLINT(google-explicit-constructor)
  EisensteinInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  EisensteinInt(long a_, long b_) : a(a_), b(b_) {}

  static EisensteinInt omega() { return {0, 1}; }
  /// 1 + 2*omega, a square root of -3.
  static EisensteinInt sqrt_minus3() { return {1, 2}; }

  bool is_zero() const { return a == 0 && b == 0; }
  std::string to_string() const;
  /// Complex value at the current default precision (or `prec_bits`).
  BigComplex to_complex(long prec_bits = 0) const;
  std::complex<double> to_complex_double() const;

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);
  EisensteinInt operator-() const { return {-a, -b}; }
};

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator*(const EisensteinInt& x, const BigInt& s);
bool operator==(const EisensteinInt& x, const EisensteinInt& y);
inline bool operator!=(const EisensteinInt& x, const EisensteinInt& y) { return !(x == y); }
std::ostream& operator<<(std::ostream& os, const EisensteinInt& z);

EisensteinInt conj(const EisensteinInt& z);
BigInt norm(const EisensteinInt& z);

/// (-omega^2)^(d mod 6).
EisensteinInt unit_pow(long d);
/// z * (-omega^2)^d without a general multiplication.
EisensteinInt mul_unit(const EisensteinInt& z, long d);
/// d in [0,6) with z = (-omega^2)^d, or nothing when z is not a unit.
std::optional<int> unit_index(const EisensteinInt& z);

/// x / y when the quotient lies in Z[omega].
std::optional<EisensteinInt> divide_exact(const EisensteinInt& x, const EisensteinInt& y);
std::optional<EisensteinInt> divide_by_sqrt_minus3(const EisensteinInt& z);
/// Quotient rounded coordinate-wise (ties toward zero) and the remainder.
std::pair<EisensteinInt, EisensteinInt> div_round(const EisensteinInt& x, const EisensteinInt& y);
/// Associate with argument in [0, pi/3), i.e. a > b >= 0. Zero maps to zero.
EisensteinInt canonical_associate(const EisensteinInt& z);
/// Canonical greatest common divisor. Throws InputError when both are zero.
EisensteinInt gcd(const EisensteinInt& x, const EisensteinInt& y);

/// Element of Z_3[omega], coordinates in {0,1,2}.
struct Residue3 {
  int a = 0;
  int b = 0;
  friend bool operator==(const Residue3&, const Residue3&) = default;
};

enum class Orbit { O0, O1, O2 };

Residue3 residue(const EisensteinInt& z);
Residue3 operator+(Residue3 x, Residue3 y);
Residue3 operator*(Residue3 x, Residue3 y);
Residue3 mul_unit(Residue3 x, long d);
/// |x|^2 mod 3.
int reduced_norm(Residue3 x);
Orbit orbit_of(Residue3 r);
/// Smallest d in [0,6) with (-omega^2)^d * y == x, if any.
std::optional<int> unit_exponent_matching(Residue3 x, Residue3 y);

}  // namespace metaplectic
