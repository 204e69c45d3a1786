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

#include "metaplectic/simulate.hpp"

namespace metaplectic {

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& m);

/// min over phi of ||U - e^{i phi} V|| in the spectral norm. U and V may be
/// isometries of equal shape. Throws InputError on shape mismatch.
double distance(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V);

/// Same quantity with the differences formed in multiprecision before the
/// singular value step, for distances far below double epsilon relative to 1.
double distance(const BigMatrix& U, const BigMatrix& V);

/// ||a - b|| for vectors, no phase quotient.
double vector_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace metaplectic
