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

#include <cstdint>
#include <vector>

#include "metaplectic/bigfloat.hpp"
#include "metaplectic/eisenstein.hpp"
#include "metaplectic/normeq.hpp"

namespace metaplectic {

/// (u|0> + v|1> + w|2>) / sqrt(-3)^k with norm(u)+norm(v)+norm(w) = 3^k.
struct EisensteinState {
  EisensteinInt u, v, w;
  long k = 0;

  bool is_unitary() const;
  /// Amplitudes at the given precision.
  std::vector<BigComplex> amplitudes(long prec_bits) const;
};

/// max(128, ceil(4 log2(1/eps)) + 64).
long approx_precision_bits(double eps);
/// Smallest k accepted by approx_complex: ceil(2 log3(1/eps) + 2 log3(2) + 2).
long complex_k_floor(double eps);
/// Starting level of the pair search: ceil(4 log3(1/eps) + log3(5) + 5).
long pair_k_start(double eps);
/// Tested upper bound on the k returned by approx_state_pair:
/// 4 log3(1/eps) + 16 log2(max(2, log2(1/eps))) + 16.
double pair_k_envelope(double eps);

/// Up to `budget` distinct u in Z[omega] with |u/sqrt(-3)^k - z| < eps and
/// |u| <= |z| sqrt(3)^k. Deterministic in `seed`. May be empty.
std::vector<EisensteinInt> approx_complex(const BigComplex& z, const BigFloat& eps, long k,
                                          std::size_t budget, std::uint64_t seed);

/// Eisenstein state within eps (plain 2-norm) of (x, y, 0).
/// Throws SynthesisError with a per-level trace once k passes
/// pair_k_start(eps) + max_extra_levels.
EisensteinState approx_state_pair(const BigComplex& x, const BigComplex& y, double eps,
                                  const SmoothnessPolicy& policy = {}, std::uint64_t seed = 0,
                                  long max_extra_levels = 64);

/// ||state - (x, y, 0)|| at the given precision.
BigFloat state_distance(const EisensteinState& s, const BigComplex& x, const BigComplex& y,
                        long prec_bits);

}  // namespace metaplectic
