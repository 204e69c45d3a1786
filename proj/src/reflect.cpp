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

#include "metaplectic/reflect.hpp"

#include <array>
#include <cmath>

#include "metaplectic/error.hpp"
#include "metaplectic/exact.hpp"
#include "metaplectic/random.hpp"

namespace metaplectic {

namespace {

void check_index(long idx, int n, const char* what) {
  if (n < 1) throw InputError("register width must be at least 1");
  if (idx < 0 || idx >= pow3(n)) throw InputError(std::string(what) + " index out of range");
}

int digit(long idx, int n, int q) { return static_cast<int>((idx / pow3(n - 1 - q)) % 3); }

// Index of |x 2 2 ... 2> on m qutrits.
long x_then_twos(int x, int m) { return x * pow3(m - 1) + pow3(m - 1) - 1; }

long anchor_index(int n) {
  if (n == 2) return 6;  // |20>
  return 2 * pow3(n - 1) + pow3(n - 2) - 1;  // |2 0 2...2>
}

// +-R on the anchor state.
Circuit anchor_circuit(int n) {
  Circuit c(n);
  if (n == 2) {
    c.add(sum(0, 1)).add(r_gate(2, 0)).add(r_gate(2, 1)).add(sum(0, 1));
    c.add(r_gate(1, 1)).add(sum(0, 1)).add(r_gate(0, 1));
    return c;
  }
  const Circuit r22 = axial_reflection_circuit(n - 1, x_then_twos(2, n - 1));
  const Circuit r12 = axial_reflection_circuit(n - 1, x_then_twos(1, n - 1));
  const Circuit r02 = axial_reflection_circuit(n - 1, x_then_twos(0, n - 1));
  const Circuit r2 = axial_reflection_circuit(n - 2, pow3(n - 2) - 1);
  c.add(sum(0, 1));
  c.append_shifted(r22, 1);
  c.add(swap_gate(0, 1));
  c.append_shifted(r22, 1);
  c.add(swap_gate(0, 1));
  c.add(sum(0, 1));
  c.append_shifted(r12, 1);
  c.append_shifted(r2, 2);
  c.add(sum(0, 1));
  c.append_shifted(r02, 1);
  return c;
}

bool is_single(const TwoLevelState& phi) { return phi.j == phi.k || (phi.b.re.is_zero() && phi.b.im.is_zero()); }

void validate(const TwoLevelState& phi) {
  check_index(phi.j, phi.n, "state");
  check_index(phi.k, phi.n, "state");
  long prec = std::max(phi.a.precision(), phi.b.precision());
  ScopedPrecision sp(prec);
  BigFloat n2 = norm(phi.a);
  if (phi.j != phi.k) n2 += norm(phi.b);
  if (abs(n2 - BigFloat(1.0, prec)) > BigFloat(1e-6, prec))
    throw InputError("two-level state is not normalized");
}

}  // namespace

long rc(int n) {
  if (n < 1) throw InputError("rc needs n >= 1");
  long a = 1, b = 4;
  if (n == 1) return a;
  for (int i = 3; i <= n; ++i) {
    long c = 4 * b + a;
    a = b;
    b = c;
  }
  return b;
}

Circuit axial_reflection_circuit(int n, long j) {
  if (n > kAxialCap)
    throw InputError("axial reflections are limited to " + std::to_string(kAxialCap) +
                     " qutrits");
  check_index(j, n, "axial reflection");
  if (n == 1) {
    Circuit c(1);
    c.add(r_gate(static_cast<int>(j), 0));
    return c;
  }
  Circuit p = basis_permutation(j, anchor_index(n), n);
  Circuit c(n);
  c.append(p);
  c.append(anchor_circuit(n));
  c.append(dagger(p));
  return c;
}

Circuit basis_permutation(long b1, long b2, int n) {
  check_index(b1, n, "basis_permutation");
  check_index(b2, n, "basis_permutation");
  Circuit c(n);
  for (int q = 0; q < n; ++q) {
    int d = ((digit(b2, n, q) - digit(b1, n, q)) % 3 + 3) % 3;
    if (d != 0) c.add(inc(q, d));
  }
  return c;
}

long classical_apply(const Circuit& c, long index) {
  const int n = c.width;
  check_index(index, n, "classical_apply");
  std::vector<int> dig(n);
  for (int q = 0; q < n; ++q) dig[q] = digit(index, n, q);
  for (const Gate& g : c.gates) {
    if (is_diagonal(g.kind)) continue;
    if (is_two_qutrit(g.kind)) {
      Gate local = g;
      local.q0 = 0;
      local.q1 = 1;
      Perm9 p = classical_permutation(local);
      int img = p[dig[g.q0] * 3 + dig[g.q1]];
      dig[g.q0] = img / 3;
      dig[g.q1] = img % 3;
      continue;
    }
    auto perm = local_permutation(g);
    if (!perm) throw InputError("classical_apply: circuit is not classical");
    dig[g.q0] = (*perm)[dig[g.q0]];
  }
  long out = 0;
  for (int q = 0; q < n; ++q) out = out * 3 + dig[q];
  return out;
}

Circuit colocate_pair(long j, long k, int n) {
  check_index(j, n, "colocate_pair");
  check_index(k, n, "colocate_pair");
  if (j == k) throw InputError("colocate_pair needs distinct states");
  Circuit c(n);
  long jj = j, kk = k;
  for (int p = 0; p + 1 < n; ++p) {
    if (digit(jj, n, p) == digit(kk, n, p)) continue;
    Circuit step(n);
    for (int q : {p, p + 1}) {
      int d = (3 - digit(jj, n, q)) % 3;
      if (d != 0) step.add(inc(q, d));
    }
    long k1 = classical_apply(step, kk);
    int d1 = digit(k1, n, p), d2 = digit(k1, n, p + 1);
    if (d2 == 0) step.add(swap_gate(p, p + 1));
    else if (d1 == d2) step.add(sum_dag(p + 1, p));
    else step.add(sum(p + 1, p));
    jj = classical_apply(step, jj);
    kk = classical_apply(step, kk);
    METAPLECTIC_CHECK(digit(jj, n, p) == digit(kk, n, p), "colocate step failed");
    c.append(step);
  }
  METAPLECTIC_CHECK(jj / 3 == kk / 3, "colocated images differ above the last digit");
  METAPLECTIC_CHECK(entangling_count(c) <= n - 1, "colocate used too many entangling gates");
  return c;
}

Eigen::VectorXcd TwoLevelState::to_eigen() const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(pow3(n));
  v(j) = a.to_complex();
  if (k != j) v(k) = b.to_complex();
  return v;
}

BigMatrix TwoLevelState::to_big(long prec_bits) const {
  BigMatrix v(pow3(n), 1, prec_bits);
  v(j, 0) = a;
  if (k != j) v(k, 0) = b;
  return v;
}

Circuit two_level_state_prep(const TwoLevelState& phi, double eps, std::uint64_t seed,
                             const SmoothnessPolicy& policy) {
  validate(phi);
  const int n = phi.n;
  Circuit c(n);
  if (is_single(phi)) {
    c.append(basis_permutation(0, phi.j, n));
    return c;
  }
  Circuit g = colocate_pair(phi.j, phi.k, n);
  const long jj = classical_apply(g, phi.j), kk = classical_apply(g, phi.k);
  const int d = static_cast<int>(jj % 3), f = static_cast<int>(kk % 3), e = 3 - d - f;
  EisensteinState s = approx_state_pair(phi.a, phi.b, eps, policy, seed);
  std::array<EisensteinInt, 3> col;
  col[d] = s.u;
  col[f] = s.v;
  col[e] = s.w;
  Circuit c1 = reduce_short_column(col[0], col[1], col[2], s.k);
  c.append(basis_permutation(0, (jj / 3) * 3, n));
  c.append_shifted(dagger(c1), n - 1);
  c.append(dagger(g));
  return c;
}

Circuit two_level_reflection(const TwoLevelState& phi, double eps, std::uint64_t seed,
                             const SmoothnessPolicy& policy) {
  validate(phi);
  if (is_single(phi)) return axial_reflection_circuit(phi.n, phi.j);
  Circuit prep = two_level_state_prep(phi, eps / (2 * std::sqrt(2.0)), seed, policy);
  Circuit c(phi.n);
  c.append(dagger(prep));
  c.append(axial_reflection_circuit(phi.n, 0));
  c.append(prep);
  return c;
}

namespace {

bool diagonal_is_negligible(const BigFloat& theta, double eps, long prec) {
  ScopedPrecision sp(prec);
  return abs(BigComplex::polar(theta) - BigComplex(1.0)) < BigFloat(eps, prec);
}

}  // namespace

int two_level_diagonal_axial_count(const BigFloat& theta, int n, double eps) {
  const long prec = std::max(theta.precision(), approx_precision_bits(eps));
  if (diagonal_is_negligible(theta, eps, prec)) return 0;
  return n == 1 ? 1 : 2;
}

Circuit two_level_diagonal(long j, long k, const BigFloat& theta, int n, double eps,
                           std::uint64_t seed, const SmoothnessPolicy& policy) {
  check_index(j, n, "two_level_diagonal");
  check_index(k, n, "two_level_diagonal");
  if (j == k) throw InputError("two_level_diagonal needs distinct states");
  const long prec = std::max(theta.precision(), approx_precision_bits(eps));
  ScopedPrecision sp(prec);
  Circuit c(n);
  // The identity is already within eps of the target.
  if (diagonal_is_negligible(theta, eps, prec)) return c;
  BigComplex ph = BigComplex::polar(theta);

  const BigFloat h = sqrt(BigFloat(0.5, prec));
  TwoLevelState r2{n, j, k, BigComplex(h, BigFloat::zero(prec)), -(ph * h)};
  if (n == 1) {
    c.append(two_level_reflection(r2, eps, seed, policy));
    c.add(tau(static_cast<int>(std::min(j, k)), static_cast<int>(std::max(j, k)), 0));
    return c;
  }
  TwoLevelState r1{n, j, k, BigComplex(h, BigFloat::zero(prec)), BigComplex(-h, BigFloat::zero(prec))};
  c.append(two_level_reflection(r2, eps / 2, derive_seed(seed, 2), policy));
  c.append(two_level_reflection(r1, eps / 2, derive_seed(seed, 1), policy));
  return c;
}

std::pair<TwoLevelState, TwoLevelState> c1inc_reflection_states(long prec_bits) {
  ScopedPrecision sp(prec_bits);
  const BigFloat h = sqrt(BigFloat(0.5, prec_bits));
  const BigFloat z = BigFloat::zero(prec_bits);
  TwoLevelState v0{2, 7, 8, BigComplex(h, z), BigComplex(-h, z)};
  TwoLevelState v2{2, 6, 7, BigComplex(h, z), BigComplex(-h, z)};
  return {v0, v2};
}

Circuit c1inc_approx(double eps, std::uint64_t seed, const SmoothnessPolicy& policy) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  auto [first, second] = c1inc_reflection_states(approx_precision_bits(eps / 2));
  Circuit c(2);
  c.append(two_level_reflection(first, eps / 2, derive_seed(seed, 1), policy));
  c.append(two_level_reflection(second, eps / 2, derive_seed(seed, 2), policy));
  return c;
}

BigMatrix reflection_matrix(const TwoLevelState& phi, long prec_bits) {
  ScopedPrecision sp(prec_bits);
  const long dim = pow3(phi.n);
  BigMatrix m = BigMatrix::identity(dim, prec_bits);
  std::vector<std::pair<long, BigComplex>> amp{{phi.j, phi.a}};
  if (phi.k != phi.j) amp.emplace_back(phi.k, phi.b);
  for (const auto& [r, x] : amp)
    for (const auto& [c, y] : amp) m(r, c) -= x * conj(y) * BigFloat(2.0, prec_bits);
  return m;
}

BigMatrix c1inc_matrix(long prec_bits) {
  BigMatrix m(9, 9, prec_bits);
  for (int c = 0; c < 3; ++c)
    for (int t = 0; t < 3; ++t) {
      int img = 3 * c + (c == 2 ? (t + 1) % 3 : t);
      m(img, 3 * c + t) = BigComplex(BigFloat(1.0, prec_bits), BigFloat::zero(prec_bits));
    }
  return m;
}

double state_prep_r_envelope(double eps) { return pair_k_envelope(eps) + 1; }

double two_level_reflection_r_envelope(int n, double eps) {
  return 2 * state_prep_r_envelope(eps / (2 * std::sqrt(2.0))) + static_cast<double>(rc(n));
}

}  // namespace metaplectic
