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

#include <vector>

#include "metaplectic/reflect.hpp"
#include "metaplectic/simulate.hpp"

namespace metaplectic {

/// U = H_1 H_2 ... H_m * e^{i phase} diag(e^{i diagonal_j}), where
/// H_i = I - 2|r_i><r_i| and the diagonal phases sum to zero.
struct HouseholderFactorization {
  int n = 1;
  std::vector<TwoLevelState> reflections;
  std::vector<BigFloat> diagonal;
  BigFloat phase;

  BigMatrix reconstruct(long prec_bits) const;
};

/// Two-level Householder elimination, column by column against the diagonal
/// pivot. Throws InputError when U is not unitary within 1e-12 or its
/// dimension is not 3^n.
HouseholderFactorization householder_factorize(const BigMatrix& U, int n);

/// Number of qutrits n with dim = 3^n, or -1.
int qutrits_for_dim(long dim);

}  // namespace metaplectic
