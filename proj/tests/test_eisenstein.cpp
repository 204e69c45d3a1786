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

#include <random>

#include "metaplectic/eisenstein.hpp"

using namespace metaplectic;

namespace {

EisensteinInt random_eis(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return {d(rng), d(rng)};
}

}  // namespace

TEST_SUITE("eisenstein") {

TEST_CASE("omega is a primitive cube root of unity") {
  EisensteinInt w = EisensteinInt::omega();
  CHECK(w * w * w == EisensteinInt(1));
  CHECK(EisensteinInt(1) + w + w * w == EisensteinInt(0));
  CHECK(EisensteinInt::sqrt_minus3() * EisensteinInt::sqrt_minus3() == EisensteinInt(-3));
  CHECK(norm(EisensteinInt::sqrt_minus3()) == 3);
}

TEST_CASE("unit group has order six") {
  for (long d = 0; d < 6; ++d) {
    CHECK(norm(unit_pow(d)) == 1);
    CHECK(unit_index(unit_pow(d)) == static_cast<int>(d));
  }
  CHECK(unit_pow(6) == EisensteinInt(1));
  CHECK(unit_pow(3) == EisensteinInt(-1));
  CHECK(unit_pow(-1) == unit_pow(5));
  CHECK_FALSE(unit_index(EisensteinInt(2)).has_value());
  EisensteinInt z(7, -3);
  for (long d = -7; d < 13; ++d) CHECK(mul_unit(z, d) == z * unit_pow(d));
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_eis(rng, 1000), y = random_eis(rng, 1000), z = random_eis(rng, 1000);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == EisensteinInt(0));
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(x * conj(x) == EisensteinInt(norm(x), 0));
  }
}

TEST_CASE("division") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    auto x = random_eis(rng, 10000), y = random_eis(rng, 100);
    if (y.is_zero()) continue;
    auto q = divide_exact(x * y, y);
    REQUIRE(q.has_value());
    CHECK(*q == x);
    auto [qq, r] = div_round(x, y);
    CHECK(qq * y + r == x);
    CHECK(norm(r) < norm(y));
  }
  CHECK_FALSE(divide_exact(EisensteinInt(1), EisensteinInt(2)).has_value());
  CHECK(divide_by_sqrt_minus3(EisensteinInt(3)).has_value());
  CHECK_FALSE(divide_by_sqrt_minus3(EisensteinInt(1)).has_value());
}

TEST_CASE("gcd divides both arguments and is canonical") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto g = random_eis(rng, 50), x = random_eis(rng, 50), y = random_eis(rng, 50);
    if (g.is_zero() || (x.is_zero() && y.is_zero())) continue;
    auto d = gcd(g * x, g * y);
    CHECK(divide_exact(g * x, d).has_value());
    CHECK(divide_exact(g * y, d).has_value());
    CHECK(divide_exact(d, g).has_value());
    CHECK(canonical_associate(d) == d);
  }
  // 7 = (3 + w)(2 - w) splits.
  auto d = gcd(EisensteinInt(7), EisensteinInt(3, 1));
  CHECK(norm(d) == 7);
}

TEST_CASE("residues mod 3") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    auto x = random_eis(rng, 1000), y = random_eis(rng, 1000);
    CHECK(residue(x + y) == residue(x) + residue(y));
    CHECK(residue(x * y) == residue(x) * residue(y));
    CHECK(reduced_norm(residue(x)) == static_cast<int>(mpz_class(norm(x) % 3).get_si()));
    CHECK(residue(mul_unit(x, 2)) == mul_unit(residue(x), 2));
  }
  // Residues of norm 1 fall into orbits under the units.
  Residue3 one{1, 0};
  for (int d = 0; d < 6; ++d) {
    auto m = unit_exponent_matching(mul_unit(one, d), one);
    REQUIRE(m.has_value());
    CHECK(mul_unit(one, *m) == mul_unit(one, d));
  }
}

}  // TEST_SUITE
