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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metaplectic {

// Qutrit 0 is the most significant ternary digit of a basis index.
enum class GateKind {
  Q0, Q1, Q2, S2, TAU01, TAU02, TAU12, INC, INC_DAG,
  R0, R1, R2, P0, P1, P2, SUM, SUM_DAG, SWAP
};

struct Gate {
  GateKind kind = GateKind::Q0;
  int power = 1;
  int q0 = 0;
  /// Second qutrit for SUM/SUM_DAG/SWAP (target for SUM), else -1.
  int q1 = -1;

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string_view gate_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool is_two_qutrit(GateKind k);
/// Allowed power range for the kind (1..1 for non-powered gates).
int max_power(GateKind k);
/// Q, R and P gates: diagonal with sixth-root-of-unity entries.
bool is_diagonal(GateKind k);
/// Exponents e with diag((-w^2)^e0, (-w^2)^e1, (-w^2)^e2) for diagonal gates.
std::array<int, 3> diagonal_exponents(const Gate& g);
/// Permutation of {0,1,2} for single-qutrit classical gates, else nothing.
std::optional<std::array<int, 3>> local_permutation(const Gate& g);
bool is_classical(GateKind k);
/// Per-gate tally: R gates and odd powers of P count 1.
int gate_r_count(const Gate& g);
/// Inverse up to a global phase.
Gate dagger(const Gate& g);
std::string to_string(const Gate& g);

// Constructors.
Gate q_gate(int j, int q, int power = 1);
Gate r_gate(int j, int q);
Gate p_gate(int j, int q, int power = 1);
Gate s2(int q, int power = 1);
Gate inc(int q, int power = 1);
Gate inc_dag(int q);
Gate tau(int a, int b, int q);
Gate sum(int control, int target);
Gate sum_dag(int control, int target);
Gate swap_gate(int a, int b);

/// Time-ordered gate list: gates[0] acts first.
struct Circuit {
  int width = 1;
  int ancillas = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int w, int anc = 0) : width(w), ancillas(anc) {}

  Circuit& add(const Gate& g);
  /// Appends `c` (acting after the current gates), remapping its qutrit i to
  /// map[i] (identity when map is empty).
  Circuit& append(const Circuit& c, const std::vector<int>& map = {});
  /// Appends `c` acting on qutrits offset..offset+c.width-1.
  Circuit& append_shifted(const Circuit& c, int offset);
  std::size_t size() const { return gates.size(); }
  bool empty() const { return gates.empty(); }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Reversed circuit of gate inverses (up to a global phase).
Circuit dagger(const Circuit& c);
/// Sum of per-gate tallies of the emitted gates.
long syntactic_r_count(const Circuit& c);
/// Count after merging each maximal run of diagonal gates on a qutrit into a
/// single diagonal (cost 0 or 1).
long r_count(const Circuit& c);
/// Rewrites diagonal runs into Q powers plus at most one R gate. Equal to the
/// input up to a global phase; syntactic_r_count(normalize(c)) == r_count(c).
Circuit normalize(const Circuit& c);
/// Gates (at most one R) for diag((-w^2)^e0, (-w^2)^e1, (-w^2)^e2) on qutrit
/// q, up to a global phase.
std::vector<Gate> diagonal_gates(std::array<int, 3> e, int q);
/// Number of SUM, SUM_DAG and SWAP gates.
long entangling_count(const Circuit& c);

/// Permutation of the 9 two-qutrit basis states.
using Perm9 = std::array<int, 9>;
/// Basis permutation of a classical gate on 2 qutrits.
Perm9 classical_permutation(const Gate& g);
/// SUM, SWAP, and every single-qutrit classical gate on either qutrit.
std::vector<Perm9> default_classical_generators();
/// Order of the permutation group generated by `gens` (BFS closure).
std::size_t classical_group_order(const std::vector<Perm9>& gens);
std::size_t classical_group_order();

}  // namespace metaplectic
