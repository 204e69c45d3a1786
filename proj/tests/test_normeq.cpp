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

#include <gmpxx.h>

#include <random>

#include "metaplectic/error.hpp"
#include "metaplectic/normeq.hpp"

using namespace metaplectic;

namespace {

// Lattice enumeration: which n <= limit are norms a^2 - ab + b^2.
std::vector<bool> brute_force_norms(long limit) {
  std::vector<bool> hit(static_cast<std::size_t>(limit + 1), false);
  const long bound = static_cast<long>(std::sqrt(4.0 * static_cast<double>(limit) / 3.0)) + 2;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b) {
      long n = a * a - a * b + b * b;
      if (n <= limit) hit[static_cast<std::size_t>(n)] = true;
    }
  return hit;
}

BigInt random_prime_1_mod_3(gmp_randclass& rng) {
  for (;;) {
    BigInt p = rng.get_z_bits(64);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p % 3 == 1) return p;
  }
}

}  // namespace

TEST_SUITE("normeq") {

TEST_CASE("examples") {
  auto s21 = solve(21);
  REQUIRE(s21.has_value());
  CHECK(norm(s21->z) == 21);
  CHECK_FALSE(solve(10).has_value());
  auto s0 = solve(0);
  REQUIRE(s0.has_value());
  CHECK(s0->z.is_zero());
  CHECK(is_easily_solvable(3));
  CHECK_FALSE(is_easily_solvable(5));
  CHECK(is_easily_solvable(49));
  CHECK(norm(solve_prime(3).z) == 3);
  CHECK(norm(solve_prime(7).z) == 7);
  CHECK_THROWS_AS(solve_prime(5), Unsolvable);
}

TEST_CASE("agrees with lattice enumeration up to 3000") {
  const long limit = 3000;
  auto hit = brute_force_norms(limit);
  for (long n = 0; n <= limit; ++n) {
    auto s = solve(n);
    CHECK_MESSAGE(s.has_value() == hit[static_cast<std::size_t>(n)], "n = ", n);
    CHECK(is_easily_solvable(n) == s.has_value());
    if (s) CHECK(norm(s->z) == n);
  }
}

TEST_CASE("modular square roots of -3") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(17);
  for (int i = 0; i < 1000; ++i) {
    BigInt p = random_prime_1_mod_3(rng);
    BigInt m = sqrt_minus3_mod_p(p);
    CHECK(m > 0);
    CHECK(m < p);
    BigInt r = (m * m + 3) % p;
    CHECK(r == 0);
  }
}

TEST_CASE("random solvable norms up to 2^128") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(18);
  int solved = 0;
  for (int i = 0; i < 1000; ++i) {
    // Build a solvable n from random factors so the verdict is known.
    BigInt a = rng.get_z_bits(62), b = rng.get_z_bits(62);
    EisensteinInt z(a, b);
    BigInt n = norm(z);
    auto s = solve(n);
    if (s) {
      CHECK(norm(s->z) == n);
      ++solved;
    } else {
      // Only allowed when the cofactor is not easily factorable.
      CHECK_FALSE(try_factor_semismooth(n).has_value());
    }
  }
  MESSAGE("solved " << solved << " of 1000 random norms");
  CHECK(solved > 0);
}

TEST_CASE("semismooth factorization reconstructs n") {
  for (long n : {1L, 2L, 12L, 49L, 63L, 1029L, 3L * 3 * 3 * 7 * 13 * 13}) {
    auto f = try_factor_semismooth(n);
    REQUIRE(f.has_value());
    BigInt prod = f->m * f->m;
    // Odd-multiplicity primes appear once; the rest is folded into m.
    for (const auto& [p, e] : f->primes) {
      CHECK(e % 2 == 1);
      prod *= p;
    }
    CHECK(prod == n);
  }
}

}  // TEST_SUITE
