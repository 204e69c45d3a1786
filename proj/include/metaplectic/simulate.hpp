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

#include <Eigen/Dense>
#include <vector>

#include "metaplectic/bigfloat.hpp"
#include "metaplectic/circuit.hpp"
#include "metaplectic/eisenstein.hpp"

namespace metaplectic {

constexpr int kDefaultSimulationCap = 8;

long pow3(int n);

/// exp(2*pi*i*phase24/24) * entries / sqrt(-3)^L, column-major.
struct ExactMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<EisensteinInt> entries;
  long L = 0;
  int phase24 = 0;

  ExactMatrix() = default;
  ExactMatrix(long r, long c) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c)) {}
  static ExactMatrix identity(long dim);
  /// Single column (u, v, w, ...) / sqrt(-3)^L.
  static ExactMatrix column(std::vector<EisensteinInt> v, long L);

  EisensteinInt& operator()(long r, long c) { return entries[static_cast<std::size_t>(c * rows + r)]; }
  const EisensteinInt& operator()(long r, long c) const {
    return entries[static_cast<std::size_t>(c * rows + r)];
  }
};

/// Strips common sqrt(-3) factors while L > 0; normalizes phase24 mod 24.
void canonicalize(ExactMatrix& m);
/// entries * entries^dagger == 3^L * I (square matrices only).
bool is_unitary(const ExactMatrix& m);
/// Equality of the represented matrices up to a 24th root of unity.
bool equal_up_to_phase(const ExactMatrix& a, const ExactMatrix& b);
/// Left-multiplies m by the circuit; rows must be 3^width.
void apply_exact(const Circuit& c, ExactMatrix& m);
ExactMatrix simulate_exact(const Circuit& c, int cap = kDefaultSimulationCap);
Eigen::MatrixXcd to_eigen(const ExactMatrix& m);

/// Column-major matrix of BigComplex.
struct BigMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<BigComplex> data;

  BigMatrix() = default;
  BigMatrix(long r, long c, long prec_bits);
  static BigMatrix identity(long dim, long prec_bits);
  static BigMatrix from_eigen(const Eigen::MatrixXcd& m, long prec_bits);

  BigComplex& operator()(long r, long c) { return data[static_cast<std::size_t>(c * rows + r)]; }
  const BigComplex& operator()(long r, long c) const {
    return data[static_cast<std::size_t>(c * rows + r)];
  }
  Eigen::MatrixXcd to_eigen() const;
};

BigMatrix to_big(const ExactMatrix& m, long prec_bits);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigMatrix adjoint(const BigMatrix& a);
/// max |(A^dagger A - I)_{ij}|.
BigFloat unitarity_defect(const BigMatrix& a);

void apply_float(const Circuit& c, BigMatrix& m);
BigMatrix simulate_float(const Circuit& c, long prec_bits, int cap = kDefaultSimulationCap);
void apply_double(const Circuit& c, Eigen::MatrixXcd& m);
Eigen::MatrixXcd simulate_double(const Circuit& c, int cap = kDefaultSimulationCap);

}  // namespace metaplectic
