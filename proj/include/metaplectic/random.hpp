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

#include "metaplectic/circuit.hpp"
#include "metaplectic/simulate.hpp"

namespace metaplectic {

/// Independent sub-seed for stream `stream` of `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-random dim x dim unitary (Gaussian matrix, modified Gram-Schmidt).
BigMatrix haar_unitary(long dim, std::uint64_t seed, long prec_bits);

/// Uniformly drawn gates on `width` qutrits (two-qutrit gates need width >= 2).
Circuit random_circuit(int width, int gate_count, std::uint64_t seed);

/// Single-qutrit circuit of Clifford gates interleaved with exactly `r` R gates.
Circuit random_1q_circuit(int r, std::uint64_t seed);

}  // namespace metaplectic
