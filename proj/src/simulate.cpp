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

#include "metaplectic/simulate.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "metaplectic/error.hpp"

namespace metaplectic {

long pow3(int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

namespace {

// Left-multiplies the column-major rows x cols block `data` by gate g.
template <class T, class Ops>
void apply_gate(const Gate& g, int width, T* data, long rows, long cols, Ops& ops) {
  if (is_two_qutrit(g.kind)) {
    Gate local = g;
    local.q0 = 0;
    local.q1 = 1;
    Perm9 perm = classical_permutation(local);
    long sa = pow3(width - 1 - g.q0), sb = pow3(width - 1 - g.q1);
    long idx[9];
    std::vector<T> tmp(9);
    for (long r = 0; r < rows; ++r) {
      if ((r / sa) % 3 != 0 || (r / sb) % 3 != 0) continue;
      for (int d0 = 0; d0 < 3; ++d0)
        for (int d1 = 0; d1 < 3; ++d1) idx[d0 * 3 + d1] = r + d0 * sa + d1 * sb;
      for (long c = 0; c < cols; ++c) {
        T* col = data + c * rows;
        for (int i = 0; i < 9; ++i) tmp[perm[i]] = std::move(col[idx[i]]);
        for (int i = 0; i < 9; ++i) col[idx[i]] = std::move(tmp[i]);
      }
    }
    return;
  }
  long s = pow3(width - 1 - g.q0);
  auto perm = local_permutation(g);
  std::array<int, 3> e{};
  if (is_diagonal(g.kind)) e = diagonal_exponents(g);
  for (long r = 0; r < rows; ++r) {
    if ((r / s) % 3 != 0) continue;
    for (long c = 0; c < cols; ++c) {
      T* col = data + c * rows;
      T* x[3] = {&col[r], &col[r + s], &col[r + 2 * s]};
      if (perm) {
        T t[3] = {std::move(*x[0]), std::move(*x[1]), std::move(*x[2])};
        for (int j = 0; j < 3; ++j) *x[(*perm)[j]] = std::move(t[j]);
      } else if (g.kind == GateKind::S2) {
        for (int p = 0; p < g.power; ++p) ops.s2(*x[0], *x[1], *x[2]);
      } else {
        for (int j = 0; j < 3; ++j)
          if (e[j] != 0) ops.diag(*x[j], e[j]);
      }
    }
  }
  if (g.kind == GateKind::S2) ops.after_s2(g.power);
}

struct ExactOps {
  ExactMatrix* m;
  void diag(EisensteinInt& x, int e) { x = mul_unit(x, e); }
  void s2(EisensteinInt& a, EisensteinInt& b, EisensteinInt& c) {
    const EisensteinInt w = EisensteinInt::omega();
    EisensteinInt na = a + w * (b + c);
    EisensteinInt nb = b + w * (a + c);
    EisensteinInt nc = c + w * (a + b);
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
  }
  // 1/sqrt(3) = i / sqrt(-3)
  void after_s2(int power) {
    m->L += power;
    m->phase24 = (m->phase24 + 6 * power) % 24;
  }
};

struct DoubleOps {
  std::complex<double> unit[6];
  std::complex<double> w;
  double inv_sqrt3;
  DoubleOps() : w(std::polar(1.0, 2 * std::numbers::pi / 3)), inv_sqrt3(1 / std::sqrt(3.0)) {
    for (int d = 0; d < 6; ++d) unit[d] = std::polar(1.0, std::numbers::pi * d / 3);
  }
  void diag(std::complex<double>& x, int e) { x *= unit[e]; }
  void s2(std::complex<double>& a, std::complex<double>& b, std::complex<double>& c) {
    auto na = (a + w * (b + c)) * inv_sqrt3;
    auto nb = (b + w * (a + c)) * inv_sqrt3;
    auto nc = (c + w * (a + b)) * inv_sqrt3;
    a = na;
    b = nb;
    c = nc;
  }
  void after_s2(int) {}
};

struct BigOps {
  std::vector<BigComplex> unit;
  BigComplex w;
  BigFloat inv_sqrt3;
  explicit BigOps(long prec) {
    ScopedPrecision sp(prec);
    BigFloat pi = BigFloat::pi(prec);
    for (int d = 0; d < 6; ++d) unit.push_back(BigComplex::polar(pi * BigFloat(d, prec) / BigFloat(3.0, prec)));
    w = unit[2];
    inv_sqrt3 = BigFloat(1.0, prec) / sqrt(BigFloat(3.0, prec));
  }
  void diag(BigComplex& x, int e) { x = x * unit[e]; }
  void s2(BigComplex& a, BigComplex& b, BigComplex& c) {
    BigComplex na = (a + w * (b + c)) * inv_sqrt3;
    BigComplex nb = (b + w * (a + c)) * inv_sqrt3;
    BigComplex nc = (c + w * (a + b)) * inv_sqrt3;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
  }
  void after_s2(int) {}
};

void check_width(const Circuit& c, long rows, int cap) {
  if (c.width > cap)
    throw InputError("circuit width " + std::to_string(c.width) + " exceeds simulation cap " +
                     std::to_string(cap));
  if (rows != pow3(c.width)) throw InputError("matrix rows do not match circuit width");
}

}  // namespace

ExactMatrix ExactMatrix::identity(long dim) {
  ExactMatrix m(dim, dim);
  for (long i = 0; i < dim; ++i) m(i, i) = EisensteinInt(1);
  return m;
}

ExactMatrix ExactMatrix::column(std::vector<EisensteinInt> v, long L) {
  ExactMatrix m;
  m.rows = static_cast<long>(v.size());
  m.cols = 1;
  m.entries = std::move(v);
  m.L = L;
  return m;
}

void canonicalize(ExactMatrix& m) {
  m.phase24 = ((m.phase24 % 24) + 24) % 24;
  while (m.L > 0) {
    std::vector<EisensteinInt> next;
    next.reserve(m.entries.size());
    for (const auto& z : m.entries) {
      auto q = divide_by_sqrt_minus3(z);
      if (!q) return;
      next.push_back(std::move(*q));
    }
    m.entries = std::move(next);
    m.L -= 1;
  }
}

bool is_unitary(const ExactMatrix& m) {
  if (m.rows != m.cols) return false;
  BigInt target;
  mpz_ui_pow_ui(target.get_mpz_t(), 3, static_cast<unsigned long>(m.L));
  for (long i = 0; i < m.rows; ++i) {
    for (long j = 0; j < m.rows; ++j) {
      EisensteinInt s(0);
      for (long k = 0; k < m.cols; ++k) s += m(i, k) * conj(m(j, k));
      if (s != (i == j ? EisensteinInt(target, BigInt(0)) : EisensteinInt(0))) return false;
    }
  }
  return true;
}

bool equal_up_to_phase(const ExactMatrix& a_in, const ExactMatrix& b_in) {
  if (a_in.rows != b_in.rows || a_in.cols != b_in.cols) return false;
  ExactMatrix a = a_in, b = b_in;
  canonicalize(a);
  canonicalize(b);
  if (a.L != b.L) return false;
  for (int d = 0; d < 6; ++d) {
    bool ok = true;
    for (std::size_t i = 0; i < a.entries.size() && ok; ++i)
      ok = a.entries[i] == mul_unit(b.entries[i], d);
    if (ok) return true;
  }
  return false;
}

void apply_exact(const Circuit& c, ExactMatrix& m) {
  check_width(c, m.rows, 64);
  ExactOps ops{&m};
  for (const Gate& g : c.gates) apply_gate(g, c.width, m.entries.data(), m.rows, m.cols, ops);
}

ExactMatrix simulate_exact(const Circuit& c, int cap) {
  if (c.width > cap)
    throw InputError("circuit width " + std::to_string(c.width) + " exceeds simulation cap " +
                     std::to_string(cap));
  ExactMatrix m = ExactMatrix::identity(pow3(c.width));
  apply_exact(c, m);
  canonicalize(m);
  return m;
}

Eigen::MatrixXcd to_eigen(const ExactMatrix& m) {
  double angle = std::numbers::pi * static_cast<double>(((m.phase24 - 6 * m.L) % 24 + 24) % 24) / 12;
  std::complex<double> factor = std::polar(std::pow(3.0, -0.5 * static_cast<double>(m.L)), angle);
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (long c = 0; c < m.cols; ++c)
    for (long r = 0; r < m.rows; ++r) out(r, c) = factor * m(r, c).to_complex_double();
  return out;
}

BigMatrix::BigMatrix(long r, long c, long prec_bits)
    : rows(r), cols(c), data(static_cast<std::size_t>(r * c), BigComplex::zero(prec_bits)) {}

BigMatrix BigMatrix::identity(long dim, long prec_bits) {
  BigMatrix m(dim, dim, prec_bits);
  for (long i = 0; i < dim; ++i) m(i, i) = BigComplex(std::complex<double>(1.0, 0.0), prec_bits);
  return m;
}

BigMatrix BigMatrix::from_eigen(const Eigen::MatrixXcd& m, long prec_bits) {
  BigMatrix out(m.rows(), m.cols(), prec_bits);
  for (long c = 0; c < m.cols(); ++c)
    for (long r = 0; r < m.rows(); ++r) out(r, c) = BigComplex(m(r, c), prec_bits);
  return out;
}

Eigen::MatrixXcd BigMatrix::to_eigen() const {
  Eigen::MatrixXcd out(rows, cols);
  for (long c = 0; c < cols; ++c)
    for (long r = 0; r < rows; ++r) out(r, c) = (*this)(r, c).to_complex();
  return out;
}

BigMatrix to_big(const ExactMatrix& m, long prec_bits) {
  ScopedPrecision sp(prec_bits);
  long k = ((m.phase24 - 6 * m.L) % 24 + 24) % 24;
  BigFloat angle = BigFloat::pi(prec_bits) * BigFloat(k, prec_bits) / BigFloat(12.0, prec_bits);
  BigComplex factor = BigComplex::polar(angle);
  BigFloat scale = sqrt3_pow(-m.L, prec_bits);
  factor = factor * scale;
  BigMatrix out(m.rows, m.cols, prec_bits);
  for (long c = 0; c < m.cols; ++c)
    for (long r = 0; r < m.rows; ++r) out(r, c) = factor * m(r, c).to_complex(prec_bits);
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols != b.rows) throw InputError("matrix dimension mismatch");
  long prec = a.data.empty() ? default_precision() : a.data[0].precision();
  BigMatrix out(a.rows, b.cols, prec);
  for (long c = 0; c < b.cols; ++c)
    for (long k = 0; k < a.cols; ++k) {
      const BigComplex& bk = b(k, c);
      if (bk.re.is_zero() && bk.im.is_zero()) continue;
      for (long r = 0; r < a.rows; ++r) out(r, c) += a(r, k) * bk;
    }
  return out;
}

BigMatrix adjoint(const BigMatrix& a) {
  long prec = a.data.empty() ? default_precision() : a.data[0].precision();
  BigMatrix out(a.cols, a.rows, prec);
  for (long c = 0; c < a.cols; ++c)
    for (long r = 0; r < a.rows; ++r) out(c, r) = conj(a(r, c));
  return out;
}

BigFloat unitarity_defect(const BigMatrix& a) {
  BigMatrix p = multiply(adjoint(a), a);
  long prec = a.data.empty() ? default_precision() : a.data[0].precision();
  BigFloat worst = BigFloat::zero(prec);
  for (long c = 0; c < p.cols; ++c)
    for (long r = 0; r < p.rows; ++r) {
      BigComplex d = p(r, c);
      if (r == c) d.re -= BigFloat(1.0, prec);
      BigFloat v = abs(d);
      if (v > worst) worst = v;
    }
  return worst;
}

void apply_float(const Circuit& c, BigMatrix& m) {
  check_width(c, m.rows, 64);
  long prec = m.data.empty() ? default_precision() : m.data[0].precision();
  ScopedPrecision sp(prec);
  BigOps ops(prec);
  for (const Gate& g : c.gates) apply_gate(g, c.width, m.data.data(), m.rows, m.cols, ops);
}

BigMatrix simulate_float(const Circuit& c, long prec_bits, int cap) {
  if (c.width > cap) throw InputError("circuit width exceeds simulation cap");
  BigMatrix m = BigMatrix::identity(pow3(c.width), prec_bits);
  apply_float(c, m);
  return m;
}

void apply_double(const Circuit& c, Eigen::MatrixXcd& m) {
  check_width(c, m.rows(), 64);
  DoubleOps ops;
  for (const Gate& g : c.gates) apply_gate(g, c.width, m.data(), m.rows(), m.cols(), ops);
}

Eigen::MatrixXcd simulate_double(const Circuit& c, int cap) {
  if (c.width > cap) throw InputError("circuit width exceeds simulation cap");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(pow3(c.width), pow3(c.width));
  apply_double(c, m);
  return m;
}

}  // namespace metaplectic
