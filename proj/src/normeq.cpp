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

#include "metaplectic/normeq.hpp"

#include <cstdint>

#include "metaplectic/error.hpp"

namespace metaplectic {

namespace {

constexpr unsigned long kTableBound = 1UL << 20;

struct PrimeBatch {
  std::uint64_t product;
  std::vector<unsigned long> primes;
};

std::vector<PrimeBatch> make_batches(unsigned long bound) {
  std::vector<char> composite(bound + 1, 0);
  std::vector<PrimeBatch> out;
  PrimeBatch cur{1, {}};
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = 1;
    unsigned __int128 next = static_cast<unsigned __int128>(cur.product) * i;
    if (next >> 64) {
      out.push_back(std::move(cur));
      cur = PrimeBatch{1, {}};
      next = i;
    }
    cur.product = static_cast<std::uint64_t>(next);
    cur.primes.push_back(i);
  }
  if (!cur.primes.empty()) out.push_back(std::move(cur));
  return out;
}

// Shared read-only table, built on first use.
const std::vector<PrimeBatch>& default_batches() {
  static const std::vector<PrimeBatch> table = make_batches(kTableBound);
  return table;
}

enum class FactorStatus { Ok, NotSemiSmooth, Rejected };

// Trial division plus cofactor classification. With `reject_early`, stops as
// soon as a prime = 2 mod 3 with odd multiplicity is found.
FactorStatus factor(const BigInt& n_in, const SmoothnessPolicy& policy, bool reject_early,
                    SemiSmoothFactorization& out) {
  if (policy.trial_division_bound < 2) throw InputError("trial_division_bound must be >= 2");
  std::vector<PrimeBatch> local;
  const std::vector<PrimeBatch>* batches = &default_batches();
  if (policy.trial_division_bound > kTableBound) {
    local = make_batches(policy.trial_division_bound);
    batches = &local;
  }
  out.m = 1;
  out.primes.clear();
  BigInt n = n_in;
  for (const PrimeBatch& batch : *batches) {
    if (n == 1) break;
    if (batch.primes.front() > policy.trial_division_bound) break;
    std::uint64_t r = mpz_fdiv_ui(n.get_mpz_t(), batch.product);
    for (unsigned long p : batch.primes) {
      if (p > policy.trial_division_bound) break;
      if (r % p != 0) continue;
      unsigned long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      if (e % 2 == 1) {
        if (reject_early && p % 3 == 2) return FactorStatus::Rejected;
        out.primes.emplace_back(BigInt(p), e);
      }
      BigInt pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), p, e / 2);
      out.m *= pe;
    }
  }
  if (n == 1) return FactorStatus::Ok;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    out.m *= s;
    return FactorStatus::Ok;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), policy.primality_test_rounds) == 0)
    return FactorStatus::NotSemiSmooth;
  if (reject_early && mpz_fdiv_ui(n.get_mpz_t(), 3) == 2) return FactorStatus::Rejected;
  out.primes.emplace_back(n, 1);
  return FactorStatus::Ok;
}

// Tonelli-Shanks for -3 mod p. Returns nothing when p misbehaves (composite).
std::optional<BigInt> try_sqrt_minus3(const BigInt& p) {
  BigInt a = p - 3;
  if (mpz_jacobi(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  BigInt q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  BigInt z = 2;
  for (int tries = 0; mpz_jacobi(z.get_mpz_t(), p.get_mpz_t()) != -1; ++tries) {
    if (tries > 100000) return std::nullopt;
    z += 1;
  }
  BigInt c, t, r, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      if (++i >= m) return std::nullopt;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  if ((r * r + 3) % p != 0) return std::nullopt;
  return r;
}

std::optional<EisensteinInt> try_solve_prime(const BigInt& p) {
  if (p == 3) return EisensteinInt(1, 2);
  auto m = try_sqrt_minus3(p);
  if (!m) return std::nullopt;
  EisensteinInt z = gcd(EisensteinInt(*m + 1, BigInt(2)), EisensteinInt(p, BigInt(0)));
  if (norm(z) != p) return std::nullopt;
  return z;
}

}  // namespace

BigInt sqrt_minus3_mod_p(const BigInt& p) {
  if (p <= 3) throw InputError("sqrt_minus3_mod_p needs a prime p > 3");
  if (mpz_fdiv_ui(p.get_mpz_t(), 3) == 2) throw Unsolvable("-3 is not a square mod " + p.get_str());
  if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) throw InputError(p.get_str() + " is not prime");
  auto m = try_sqrt_minus3(p);
  if (!m) throw InvariantViolation("Tonelli-Shanks failed for " + p.get_str());
  return *m;
}

NormEquationSolution solve_prime(const BigInt& p) {
  if (p == 3) return {EisensteinInt(1, 2), p};
  if (p < 2) throw InputError("solve_prime needs a prime, got " + p.get_str());
  if (mpz_fdiv_ui(p.get_mpz_t(), 3) == 2) throw Unsolvable(p.get_str() + " = 2 mod 3");
  if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) throw InputError(p.get_str() + " is not prime");
  auto z = try_solve_prime(p);
  if (!z) throw InvariantViolation("norm equation solver failed for prime " + p.get_str());
  return {*z, p};
}

std::optional<SemiSmoothFactorization> try_factor_semismooth(const BigInt& n,
                                                             const SmoothnessPolicy& policy) {
  if (n < 1) throw InputError("try_factor_semismooth needs n >= 1");
  SemiSmoothFactorization f;
  if (factor(n, policy, false, f) != FactorStatus::Ok) return std::nullopt;
  return f;
}

std::optional<NormEquationSolution> solve(const BigInt& n, const SmoothnessPolicy& policy) {
  if (n < 0) throw InputError("norm equation needs n >= 0");
  if (n == 0) return NormEquationSolution{EisensteinInt(0), n};
  SemiSmoothFactorization f;
  if (factor(n, policy, true, f) != FactorStatus::Ok) return std::nullopt;
  EisensteinInt z(f.m, BigInt(0));
  for (const auto& [p, e] : f.primes) {
    if (mpz_fdiv_ui(p.get_mpz_t(), 3) == 2) return std::nullopt;
    auto zp = try_solve_prime(p);
    if (!zp) return std::nullopt;
    z = z * *zp;
  }
  if (norm(z) != n) return std::nullopt;
  return NormEquationSolution{z, n};
}

bool is_easily_solvable(const BigInt& n, const SmoothnessPolicy& policy) {
  if (n < 0) throw InputError("norm equation needs n >= 0");
  if (n == 0) return true;
  SemiSmoothFactorization f;
  return factor(n, policy, true, f) == FactorStatus::Ok;
}

}  // namespace metaplectic
