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

#include "metaplectic/approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "metaplectic/error.hpp"
#include "metaplectic/random.hpp"

namespace metaplectic {

namespace {

BigInt pow3_big(long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(k));
  return r;
}

double log3(double x) { return std::log(x) / std::log(3.0); }

// z * i^k
BigComplex times_i_pow(const BigComplex& z, long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.im, z.re};
    case 2: return {-z.re, -z.im};
    default: return {z.im, -z.re};
  }
}

struct EisLess {
  bool operator()(const EisensteinInt& x, const EisensteinInt& y) const {
    int c = cmp(x.a, y.a);
    return c != 0 ? c < 0 : x.b < y.b;
  }
};

}  // namespace

bool EisensteinState::is_unitary() const {
  if (k < 0) return false;
  return norm(u) + norm(v) + norm(w) == pow3_big(k);
}

std::vector<BigComplex> EisensteinState::amplitudes(long prec_bits) const {
  ScopedPrecision sp(prec_bits);
  BigFloat s = sqrt3_pow(k, prec_bits);
  std::vector<BigComplex> out;
  for (const auto* z : {&u, &v, &w}) out.push_back(times_i_pow(z->to_complex(prec_bits), -k) / s);
  return out;
}

long approx_precision_bits(double eps) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  return std::max(128L, static_cast<long>(std::ceil(4 * std::log2(1 / eps))) + 64);
}

long complex_k_floor(double eps) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  return std::max(0L, static_cast<long>(std::ceil(2 * log3(1 / eps) + 2 * log3(2.0) + 2)));
}

long pair_k_start(double eps) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  return std::max(0L, static_cast<long>(std::ceil(4 * log3(1 / eps) + log3(5.0) + 5)));
}

double pair_k_envelope(double eps) {
  double l = std::log2(1 / eps);
  return 4 * log3(1 / eps) + 16 * std::log2(std::max(2.0, l)) + 16;
}

std::vector<EisensteinInt> approx_complex(const BigComplex& z, const BigFloat& eps, long k,
                                          std::size_t budget, std::uint64_t seed) {
  if (!(eps.sign() > 0)) throw InputError("eps must be positive");
  if (k < complex_k_floor(eps.to_double()))
    throw InputError("k = " + std::to_string(k) + " is below the floor " +
                     std::to_string(complex_k_floor(eps.to_double())));
  const long prec = std::max({z.precision(), eps.precision(), 64 + k, 128L});
  ScopedPrecision sp(prec);
  BigFloat zabs = abs(z);
  if (zabs > BigFloat(1.0 + 1e-20, prec)) throw InputError("approx_complex needs |z| <= 1");

  std::vector<EisensteinInt> out;
  if (budget == 0) return out;
  if (zabs < eps) out.push_back(EisensteinInt(0));
  if (zabs.is_zero()) return out;

  const BigFloat S = sqrt3_pow(k, prec);
  const BigFloat D = eps * S;
  const BigComplex t = times_i_pow(z, k) * S;
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat third = pi / BigFloat(3.0, prec);

  // Rotate by (-w^2)^-d into the sector [pi/12, 5pi/12].
  BigFloat theta = arg(t) - pi / BigFloat(12.0, prec);
  long d = floor_to_int(theta / third).get_si();
  d = ((d % 6) + 6) % 6;
  const BigComplex tr = t * BigComplex::polar(-(third * BigFloat(d, prec)));

  const BigFloat two_over_sqrt3 = BigFloat(2.0, prec) / sqrt(BigFloat(3.0, prec));
  const BigInt b_lo = ceil_to_int((tr.im - D / BigFloat(4.0, prec)) * two_over_sqrt3);
  const BigInt b_hi = floor_to_int(tr.im * two_over_sqrt3);
  const BigFloat a_width = D * BigFloat(3.0 / 16.0, prec);
  auto a_range = [&](const BigInt& b) {
    BigFloat c = tr.re + BigFloat(b, prec) / BigFloat(2.0, prec);
    return std::pair{ceil_to_int(c - a_width), floor_to_int(c)};
  };

  const BigFloat bound = norm(z) * S * S;
  auto accept = [&](const EisensteinInt& u) {
    if (BigFloat(norm(u), prec) > bound) return false;
    return abs(u.to_complex(prec) - t) < D;
  };

  std::set<EisensteinInt, EisLess> seen;
  for (const auto& u : out) seen.insert(u);
  auto consider = [&](const BigInt& a, const BigInt& b) {
    EisensteinInt u = mul_unit(EisensteinInt(a, b), d);
    if (seen.count(u)) return;
    seen.insert(u);
    if (accept(u)) out.push_back(u);
  };

  if (b_hi < b_lo) return out;
  const BigInt nb = b_hi - b_lo + 1;
  const BigInt na = floor_to_int(a_width) + 2;
  const BigInt cap = BigInt(static_cast<unsigned long>(4 * budget + 64));
  if (nb * na <= cap) {
    std::vector<std::pair<BigInt, BigInt>> all;
    for (BigInt b = b_lo; b <= b_hi; ++b) {
      auto [lo, hi] = a_range(b);
      for (BigInt a = lo; a <= hi; ++a) all.emplace_back(a, b);
    }
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    for (const auto& [a, b] : all) {
      if (out.size() >= budget) break;
      consider(a, b);
    }
  } else {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(seed));
    const std::size_t attempts = 16 * budget + 64;
    for (std::size_t i = 0; i < attempts && out.size() < budget; ++i) {
      BigInt b = b_lo + rng.get_z_range(nb);
      auto [lo, hi] = a_range(b);
      if (hi < lo) continue;
      BigInt a = lo + rng.get_z_range(BigInt(hi - lo + 1));
      consider(a, b);
    }
  }
  if (out.size() > budget) out.resize(budget);
  return out;
}

BigFloat state_distance(const EisensteinState& s, const BigComplex& x, const BigComplex& y,
                        long prec_bits) {
  ScopedPrecision sp(prec_bits);
  auto amp = s.amplitudes(prec_bits);
  return sqrt(norm(amp[0] - x) + norm(amp[1] - y) + norm(amp[2]));
}

EisensteinState approx_state_pair(const BigComplex& x_in, const BigComplex& y_in, double eps,
                                  const SmoothnessPolicy& policy, std::uint64_t seed,
                                  long max_extra_levels) {
  if (!(eps > 0 && eps < 1)) throw InputError("approx_state_pair needs 0 < eps < 1");
  const long prec = std::max({approx_precision_bits(eps), x_in.precision(), y_in.precision()});
  ScopedPrecision sp(prec);
  BigComplex x(x_in.re, x_in.im), y(y_in.re, y_in.im);
  BigFloat n2 = norm(x) + norm(y);
  if (abs(n2 - BigFloat(1.0, prec)) > BigFloat(1e-6, prec))
    throw InputError("approx_state_pair target is not a unit vector");
  BigFloat n = sqrt(n2);
  x = x / n;
  y = y / n;
  const BigComplex x_orig = x, y_orig = y;
  const BigFloat eps_big(eps, prec);

  // Tiny amplitudes are snapped to zero; the remaining budget covers the snap.
  double eps_inner = eps;
  const BigFloat snap = eps_big / BigFloat(4.0, prec);
  if (abs(x) < snap) {
    x = BigComplex::zero(prec);
    y = y / abs(y);
    eps_inner = 0.75 * eps;
  } else if (abs(y) < snap) {
    y = BigComplex::zero(prec);
    x = x / abs(x);
    eps_inner = 0.75 * eps;
  }

  // Level 0: a unit multiple of |0> or |1>.
  for (int pos = 0; pos < 2; ++pos)
    for (int d = 0; d < 6; ++d) {
      EisensteinState s;
      (pos == 0 ? s.u : s.v) = unit_pow(d);
      if (state_distance(s, x_orig, y_orig, prec) < eps_big) return s;
    }

  const BigFloat delta = BigFloat(eps_inner * eps_inner, prec) / BigFloat(5.0, prec);
  const long k0 = pair_k_start(eps_inner);
  const long k_max = pair_k_start(eps) + max_extra_levels;
  std::vector<std::string> trace;
  for (long k = k0; k <= k_max; ++k) {
    const std::size_t per = static_cast<std::size_t>(3 * k);
    auto us = approx_complex(x, delta, k, per, derive_seed(seed, 2 * static_cast<std::uint64_t>(k)));
    auto vs = approx_complex(y, delta, k, per, derive_seed(seed, 2 * static_cast<std::uint64_t>(k) + 1));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j) pairs.emplace_back(i, j);
    std::mt19937_64 rng(derive_seed(seed, 0x9a17ULL + static_cast<std::uint64_t>(k)));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (pairs.size() > per) pairs.resize(per);

    const BigInt total = pow3_big(k);
    std::size_t tried = 0, solvable = 0;
    for (const auto& [i, j] : pairs) {
      BigInt r = total - norm(us[i]) - norm(vs[j]);
      if (r < 0) continue;
      ++tried;
      auto sol = solve(r, policy);
      if (!sol) continue;
      ++solvable;
      EisensteinState s{us[i], vs[j], sol->z, k};
      METAPLECTIC_CHECK(s.is_unitary(), "completed state is not unitary");
      if (state_distance(s, x_orig, y_orig, prec) < eps_big) return s;
    }
    std::ostringstream line;
    line << "k=" << k << " u_candidates=" << us.size() << " v_candidates=" << vs.size()
         << " pairs_tried=" << tried << " solvable=" << solvable;
    trace.push_back(line.str());
  }
  throw SynthesisError("approx_state_pair: no solvable candidate up to k = " +
                           std::to_string(k_max),
                       std::move(trace));
}

}  // namespace metaplectic
