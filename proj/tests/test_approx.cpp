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

#include <doctest.h>

#include <cmath>

#include "metaplectic/approx.hpp"
#include "metaplectic/error.hpp"
#include "metaplectic/random.hpp"
#include "metaplectic/simulate.hpp"

using namespace metaplectic;

namespace {

// Both inequalities of approx_complex, checked at `prec` bits.
void check_candidate(const EisensteinInt& u, const BigComplex& z, const BigFloat& eps, long k,
                     long prec) {
  ScopedPrecision sp(prec);
  const BigFloat scale = sqrt3_pow(k, prec);
  // u / sqrt(-3)^k = u * (-i)^k / sqrt(3)^k.
  BigComplex uc = u.to_complex(prec);
  BigComplex rot(BigFloat(1.0, prec), BigFloat::zero(prec));
  const BigComplex minus_i(BigFloat::zero(prec), BigFloat(-1.0, prec));
  for (long t = 0; t < k % 4; ++t) rot = rot * minus_i;
  BigComplex approx = (uc * rot) / scale;
  CHECK(abs(approx - z) < eps);
  CHECK(sqrt(BigFloat(norm(u), prec)) <= abs(z) * scale);
}

BigComplex cx(double re, double im, long prec) { return {BigFloat(re, prec), BigFloat(im, prec)}; }

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("approx_complex examples") {
  const long prec = 128;
  ScopedPrecision sp(prec);
  auto zero = approx_complex(cx(0, 0, prec), BigFloat(0.1, prec), 10, 8, 1);
  bool has_zero = false;
  for (const auto& u : zero) has_zero = has_zero || u.is_zero();
  CHECK(has_zero);

  CHECK(complex_k_floor(0.1) == 8);
  auto one = approx_complex(cx(1, 0, prec), BigFloat(0.1, prec), 8, 50, 2);
  CHECK_FALSE(one.empty());
  for (const auto& u : one) check_candidate(u, cx(1, 0, prec), BigFloat(0.1, prec), 8, prec);

  const long k = static_cast<long>(std::ceil(2 * std::log(1e3) / std::log(3.0))) + 5;
  BigComplex z = cx(0.5, 0.5, prec);
  auto c = approx_complex(z, BigFloat(1e-3, prec), k, 20, 3);
  CHECK(c.size() >= 1);
  CHECK(c.size() <= 20);
  for (const auto& u : c) check_candidate(u, z, BigFloat(1e-3, prec), k, prec);

  CHECK_THROWS(approx_complex(z, BigFloat(1e-3, prec), 3, 20, 3));
}

TEST_CASE("approx_complex is deterministic and distinct") {
  ScopedPrecision sp(128);
  BigComplex z = cx(0.3, -0.7, 128);
  auto a = approx_complex(z, BigFloat(1e-2, 128), 14, 30, 9);
  auto b = approx_complex(z, BigFloat(1e-2, 128), 14, 30, 9);
  CHECK(a == b);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(a[i] != a[j]);
}

TEST_CASE("trivial target is returned at level zero") {
  ScopedPrecision sp(128);
  auto s = approx_state_pair(cx(1, 0, 128), cx(0, 0, 128), 0.5);
  CHECK(s.k == 0);
  CHECK(norm(s.u) == 1);
  CHECK(s.v.is_zero());
  CHECK(s.w.is_zero());
}

TEST_CASE("state approximation examples") {
  struct Case {
    double xr, xi, yr, yi, eps;
  };
  const double h = std::sqrt(0.5);
  for (const Case& t : {Case{h, 0, h, 0, 1e-3}, Case{std::cos(0.3), 0, 0, std::sin(0.3), 1e-6}}) {
    const long prec = approx_precision_bits(t.eps);
    ScopedPrecision sp(prec);
    BigComplex x = cx(t.xr, t.xi, prec), y = cx(t.yr, t.yi, prec);
    BigFloat n = sqrt(norm(x) + norm(y));
    x = x / n;
    y = y / n;
    auto s = approx_state_pair(x, y, t.eps, {}, 4);
    CHECK(s.is_unitary());
    CHECK(norm(s.u) + norm(s.v) + norm(s.w) == [&] {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(s.k));
      return p;
    }());
    CHECK(state_distance(s, x, y, prec) < BigFloat(t.eps, prec));
    CHECK(static_cast<double>(s.k) <= pair_k_envelope(t.eps));
    // 2 Re<phi|psi> > 2 - eps^2.
    auto amp = s.amplitudes(prec);
    BigFloat re = (conj(x) * amp[0] + conj(y) * amp[1]).re;
    CHECK(re * BigFloat(2.0, prec) > BigFloat(2.0, prec) - BigFloat(t.eps * t.eps, prec));
  }
}

TEST_CASE("random targets: distance, envelope, determinism") {
  for (double eps : {1e-2, 1e-4}) {
    const long prec = approx_precision_bits(eps);
    ScopedPrecision sp(prec);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      BigMatrix h = haar_unitary(2, seed, prec);
      auto s = approx_state_pair(h(0, 0), h(1, 0), eps, {}, seed);
      CHECK(s.is_unitary());
      CHECK(state_distance(s, h(0, 0), h(1, 0), prec) < BigFloat(eps, prec));
      CHECK(static_cast<double>(s.k) <= pair_k_envelope(eps));
      auto again = approx_state_pair(h(0, 0), h(1, 0), eps, {}, seed);
      CHECK(again.u == s.u);
      CHECK(again.v == s.v);
      CHECK(again.w == s.w);
    }
  }
}

TEST_CASE("looser eps never needs a larger level") {
  const double eps = 1e-4;
  const long prec = approx_precision_bits(eps);
  ScopedPrecision sp(prec);
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    BigMatrix h = haar_unitary(2, seed, prec);
    auto tight = approx_state_pair(h(0, 0), h(1, 0), eps, {}, seed);
    auto loose = approx_state_pair(h(0, 0), h(1, 0), 2 * eps, {}, seed);
    CHECK(loose.k <= tight.k);
  }
}

TEST_CASE("small amplitudes snap to zero") {
  const double eps = 1e-3;
  const long prec = approx_precision_bits(eps);
  ScopedPrecision sp(prec);
  BigComplex x = cx(1, 0, prec), y = cx(1e-5, 0, prec);
  BigFloat n = sqrt(norm(x) + norm(y));
  auto s = approx_state_pair(x / n, y / n, eps, {}, 1);
  CHECK(state_distance(s, x / n, y / n, prec) < BigFloat(eps, prec));
}

TEST_CASE("rejects invalid inputs") {
  ScopedPrecision sp(128);
  CHECK_THROWS_AS(approx_state_pair(cx(1, 0, 128), cx(0, 0, 128), 0.0), InputError);
  CHECK_THROWS_AS(approx_state_pair(cx(1, 0, 128), cx(0, 0, 128), 1.5), InputError);
  CHECK_THROWS_AS(approx_state_pair(cx(2, 0, 128), cx(0, 0, 128), 0.1), InputError);
}

}  // TEST_SUITE
