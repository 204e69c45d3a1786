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

#include "metaplectic/householder.hpp"

#include "metaplectic/error.hpp"

namespace metaplectic {

int qutrits_for_dim(long dim) {
  int n = 0;
  long d = 1;
  while (d < dim) {
    d *= 3;
    ++n;
  }
  return (d == dim && n >= 1) ? n : -1;
}

BigMatrix HouseholderFactorization::reconstruct(long prec_bits) const {
  ScopedPrecision sp(prec_bits);
  const long dim = pow3(n);
  BigMatrix m(dim, dim, prec_bits);
  for (long j = 0; j < dim; ++j) m(j, j) = BigComplex::polar(phase + diagonal[j]);
  for (auto it = reflections.rbegin(); it != reflections.rend(); ++it)
    m = multiply(reflection_matrix(*it, prec_bits), m);
  return m;
}

HouseholderFactorization householder_factorize(const BigMatrix& U, int n) {
  if (U.rows != U.cols || qutrits_for_dim(U.rows) != n)
    throw InputError("matrix dimension must be 3^n");
  const long prec = U.data.empty() ? default_precision() : U.data[0].precision();
  ScopedPrecision sp(prec);
  if (unitarity_defect(U) > BigFloat(1e-12, prec)) throw InputError("input not unitary");

  const long dim = U.rows;
  const BigFloat tiny = ldexp(BigFloat(1.0, prec), -(prec - 16));
  const BigFloat two(2.0, prec);
  BigMatrix A = U;
  HouseholderFactorization f;
  f.n = n;
  for (long c = 0; c + 1 < dim; ++c) {
    for (long r = c + 1; r < dim; ++r) {
      const BigComplex x = A(c, c), y = A(r, c);
      if (abs(y) < tiny) continue;
      const BigFloat len = sqrt(norm(x) + norm(y));
      BigComplex unit_x(BigFloat(1.0, prec), BigFloat::zero(prec));
      if (abs(x) > tiny) unit_x = x / abs(x);
      const BigComplex rho = -(unit_x * len);
      BigComplex p0 = x - rho, p1 = y;
      const BigFloat pn = sqrt(norm(p0) + norm(p1));
      p0 = p0 / pn;
      p1 = p1 / pn;
      // A <- (I - 2 phi phi^dagger) A on rows c and r.
      for (long k = 0; k < dim; ++k) {
        BigComplex s = conj(p0) * A(c, k) + conj(p1) * A(r, k);
        A(c, k) -= p0 * s * two;
        A(r, k) -= p1 * s * two;
      }
      f.reflections.push_back(TwoLevelState{n, c, r, p0, p1});
    }
  }
  BigFloat mean = BigFloat::zero(prec);
  std::vector<BigFloat> theta;
  for (long j = 0; j < dim; ++j) {
    theta.push_back(arg(A(j, j)));
    mean += theta.back();
  }
  mean /= BigFloat(static_cast<double>(dim), prec);
  f.phase = mean;
  for (auto& t : theta) f.diagonal.push_back(t - mean);
  return f;
}

}  // namespace metaplectic
