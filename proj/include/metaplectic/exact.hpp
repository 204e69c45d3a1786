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

#include "metaplectic/circuit.hpp"
#include "metaplectic/eisenstein.hpp"
#include "metaplectic/simulate.hpp"

namespace metaplectic {

enum class ColumnCase { Case0, Case1 };

/// Single-qutrit circuit taking the unit column (u, v, w) to |0> up to phase.
/// Exactly one entry must be nonzero and a unit.
Circuit reduce_unit_entry_state(const EisensteinInt& u, const EisensteinInt& v,
                                const EisensteinInt& w);

/// Case0: every |.|^2 divisible by 3. Case1: every |.|^2 = 1 mod 3.
ColumnCase case_split(const EisensteinInt& u, const EisensteinInt& v, const EisensteinInt& w,
                      long L);

/// Circuit c on one qutrit with c (u, v, w)/sqrt(-3)^L = |0> up to a phase in
/// mu_24. R-count at most L + 1.
Circuit reduce_short_column(const EisensteinInt& u, const EisensteinInt& v,
                            const EisensteinInt& w, long L);

/// Column (0, v, w)/sqrt(-3)^L: maps it to |1> up to phase with at most one
/// P gate and one classical gate.
Circuit reduce_two_entry_column(const EisensteinInt& v, const EisensteinInt& w, long L);

/// Circuit equal to the 3x3 matrix up to a phase in mu_24, R-count <= L + 3.
Circuit exact_synthesize_1q(const ExactMatrix& m);

}  // namespace metaplectic
