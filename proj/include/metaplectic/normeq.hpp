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
#include <utility>
#include <vector>

#include "metaplectic/eisenstein.hpp"

namespace metaplectic {

struct SmoothnessPolicy {
  unsigned long trial_division_bound = 1UL << 20;
  int primality_test_rounds = 40;
};

struct NormEquationSolution {
  EisensteinInt z;
  BigInt n;
};

/// n = m^2 * prod(p) over `primes`. Each entry carries the full (odd)
/// multiplicity of p in n; the even part is folded into m.
struct SemiSmoothFactorization {
  BigInt m;
  std::vector<std::pair<BigInt, unsigned long>> primes;
};

/// m in (0, p) with m^2 = -3 mod p. Requires p prime, p = 1 mod 3.
BigInt sqrt_minus3_mod_p(const BigInt& p);

/// z with norm(z) = p for p = 3 or a prime p = 1 mod 3. Throws Unsolvable for
/// p = 2 mod 3 and InputError for other invalid p.
NormEquationSolution solve_prime(const BigInt& p);

std::optional<SemiSmoothFactorization> try_factor_semismooth(const BigInt& n,
                                                             const SmoothnessPolicy& policy = {});

std::optional<NormEquationSolution> solve(const BigInt& n, const SmoothnessPolicy& policy = {});

bool is_easily_solvable(const BigInt& n, const SmoothnessPolicy& policy = {});

}  // namespace metaplectic
