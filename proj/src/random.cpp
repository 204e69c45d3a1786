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

#include "metaplectic/random.hpp"

#include <random>

#include "metaplectic/error.hpp"

namespace metaplectic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr GateKind kAllKinds[] = {
    GateKind::Q0,  GateKind::Q1,      GateKind::Q2,    GateKind::S2,    GateKind::TAU01,
    GateKind::TAU02, GateKind::TAU12, GateKind::INC,   GateKind::INC_DAG, GateKind::R0,
    GateKind::R1,  GateKind::R2,      GateKind::P0,    GateKind::P1,    GateKind::P2,
    GateKind::SUM, GateKind::SUM_DAG, GateKind::SWAP};

constexpr GateKind kCliffordLocal[] = {GateKind::Q0,    GateKind::Q1,    GateKind::Q2,
                                       GateKind::S2,    GateKind::TAU01, GateKind::TAU02,
                                       GateKind::TAU12, GateKind::INC};

template <class Rng>
int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class Rng>
Gate random_local(Rng& rng, GateKind k, int q) {
  return Gate{k, uniform(rng, 1, max_power(k)), q, -1};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x51ed2701ULL));
}

BigMatrix haar_unitary(long dim, std::uint64_t seed, long prec_bits) {
  if (dim < 1) throw InputError("haar_unitary needs dim >= 1");
  ScopedPrecision sp(prec_bits);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BigMatrix m(dim, dim, prec_bits);
  for (auto& z : m.data) z = BigComplex(std::complex<double>(gauss(rng), gauss(rng)), prec_bits);
  for (long c = 0; c < dim; ++c) {
    for (long p = 0; p < c; ++p) {
      BigComplex dot = BigComplex::zero(prec_bits);
      for (long r = 0; r < dim; ++r) dot += conj(m(r, p)) * m(r, c);
      for (long r = 0; r < dim; ++r) m(r, c) -= dot * m(r, p);
    }
    BigFloat nrm = BigFloat::zero(prec_bits);
    for (long r = 0; r < dim; ++r) nrm += norm(m(r, c));
    nrm = sqrt(nrm);
    for (long r = 0; r < dim; ++r) m(r, c) = m(r, c) / nrm;
  }
  return m;
}

Circuit random_circuit(int width, int gate_count, std::uint64_t seed) {
  if (width < 1) throw InputError("random_circuit needs width >= 1");
  std::mt19937_64 rng(seed);
  Circuit c(width);
  const int kinds = width >= 2 ? 18 : 15;
  for (int i = 0; i < gate_count; ++i) {
    GateKind k = kAllKinds[uniform(rng, 0, kinds - 1)];
    int q0 = uniform(rng, 0, width - 1);
    if (is_two_qutrit(k)) {
      int q1 = uniform(rng, 0, width - 2);
      if (q1 >= q0) ++q1;
      c.add(Gate{k, 1, q0, q1});
    } else {
      c.add(random_local(rng, k, q0));
    }
  }
  return c;
}

Circuit random_1q_circuit(int r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Circuit c(1);
  auto cliffords = [&] {
    int n = uniform(rng, 1, 3);
    for (int i = 0; i < n; ++i)
      c.add(random_local(rng, kCliffordLocal[uniform(rng, 0, 7)], 0));
  };
  for (int i = 0; i < r; ++i) {
    cliffords();
    c.add(r_gate(uniform(rng, 0, 2), 0));
  }
  cliffords();
  return c;
}

}  // namespace metaplectic
