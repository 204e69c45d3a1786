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

#include "metaplectic/approx.hpp"
#include "metaplectic/circuit.hpp"
#include "metaplectic/simulate.hpp"

namespace metaplectic {

/// Largest register for which axial reflections are expanded.
constexpr int kAxialCap = 8;

/// R-count of the n-qutrit axial reflection: rc(1)=1, rc(2)=4,
/// rc(n) = 4 rc(n-1) + rc(n-2).
long rc(int n);

/// Exact circuit for I - 2|j><j| on n qutrits, up to a sign.
Circuit axial_reflection_circuit(int n, long j);

/// Per-digit INC powers taking |b1> to |b2>.
Circuit basis_permutation(long b1, long b2, int n);

/// Image of basis state `index` under a classical circuit.
long classical_apply(const Circuit& c, long index);

/// Classical circuit g with g|j> and g|k> differing only in the last digit.
/// Uses at most n-1 SUM, SUM_DAG or SWAP gates.
Circuit colocate_pair(long j, long k, int n);

/// a|j> + b|k> on n qutrits; b is ignored when j == k.
struct TwoLevelState {
  int n = 1;
  long j = 0;
  long k = 0;
  BigComplex a{1.0};
  BigComplex b{0.0};

  Eigen::VectorXcd to_eigen() const;
  BigMatrix to_big(long prec_bits) const;
};

/// Circuit c with c|0...0> within eps of phi up to a global phase.
Circuit two_level_state_prep(const TwoLevelState& phi, double eps, std::uint64_t seed,
                             const SmoothnessPolicy& policy = {});

/// c R_{|0...0>} c^dagger approximating I - 2|phi><phi| within eps.
Circuit two_level_reflection(const TwoLevelState& phi, double eps, std::uint64_t seed,
                             const SmoothnessPolicy& policy = {});

/// Approximates the diagonal with e^{i theta} at j and e^{-i theta} at k.
/// Uses at most two axial reflections (one for n = 1).
Circuit two_level_diagonal(long j, long k, const BigFloat& theta, int n, double eps,
                           std::uint64_t seed, const SmoothnessPolicy& policy = {});

/// Number of axial reflections used by two_level_diagonal for these inputs.
int two_level_diagonal_axial_count(const BigFloat& theta, int n, double eps);

/// The two reflection states whose product is C^1(INC) (control qutrit 0):
/// first = |2>(|1>-|2>)/sqrt2 (applied first), second = |2>(|0>-|1>)/sqrt2.
std::pair<TwoLevelState, TwoLevelState> c1inc_reflection_states(long prec_bits);

/// Two-qutrit circuit within eps of C^1(INC) (control 0, target 1).
Circuit c1inc_approx(double eps, std::uint64_t seed, const SmoothnessPolicy& policy = {});

/// Ideal matrices.
BigMatrix reflection_matrix(const TwoLevelState& phi, long prec_bits);
BigMatrix c1inc_matrix(long prec_bits);

/// R-count envelopes used by the tests and the synthesis bounds.
double state_prep_r_envelope(double eps);
double two_level_reflection_r_envelope(int n, double eps);

}  // namespace metaplectic
