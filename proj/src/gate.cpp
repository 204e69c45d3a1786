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

#include <utility>

#include "metaplectic/circuit.hpp"
#include "metaplectic/error.hpp"

namespace metaplectic {

namespace {

constexpr std::pair<GateKind, std::string_view> kNames[] = {
    {GateKind::Q0, "Q0"},       {GateKind::Q1, "Q1"},       {GateKind::Q2, "Q2"},
    {GateKind::S2, "S2"},       {GateKind::TAU01, "TAU01"}, {GateKind::TAU02, "TAU02"},
    {GateKind::TAU12, "TAU12"}, {GateKind::INC, "INC"},     {GateKind::INC_DAG, "INC_DAG"},
    {GateKind::R0, "R0"},       {GateKind::R1, "R1"},       {GateKind::R2, "R2"},
    {GateKind::P0, "P0"},       {GateKind::P1, "P1"},       {GateKind::P2, "P2"},
    {GateKind::SUM, "SUM"},     {GateKind::SUM_DAG, "SUM_DAG"}, {GateKind::SWAP, "SWAP"},
};

int diag_index(GateKind k) {
  switch (k) {
    case GateKind::Q0: case GateKind::R0: case GateKind::P0: return 0;
    case GateKind::Q1: case GateKind::R1: case GateKind::P1: return 1;
    case GateKind::Q2: case GateKind::R2: case GateKind::P2: return 2;
    default: return -1;
  }
}

void check_index(int j) {
  if (j < 0 || j > 2) throw InputError("qutrit level out of range: " + std::to_string(j));
}

}  // namespace

std::string_view gate_name(GateKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& [kind, n] : kNames)
    if (n == name) return kind;
  return std::nullopt;
}

bool is_two_qutrit(GateKind k) {
  return k == GateKind::SUM || k == GateKind::SUM_DAG || k == GateKind::SWAP;
}

int max_power(GateKind k) {
  switch (k) {
    case GateKind::Q0: case GateKind::Q1: case GateKind::Q2:
    case GateKind::S2: case GateKind::INC: return 2;
    case GateKind::P0: case GateKind::P1: case GateKind::P2: return 5;
    default: return 1;
  }
}

bool is_diagonal(GateKind k) { return diag_index(k) >= 0; }

std::array<int, 3> diagonal_exponents(const Gate& g) {
  std::array<int, 3> e{0, 0, 0};
  int j = diag_index(g.kind);
  if (j < 0) throw InputError("not a diagonal gate: " + std::string(gate_name(g.kind)));
  switch (g.kind) {
    case GateKind::Q0: case GateKind::Q1: case GateKind::Q2:
      e[j] = (2 * g.power) % 6;  // omega = (-w^2)^2
      break;
    case GateKind::R0: case GateKind::R1: case GateKind::R2:
      e[j] = 3;
      break;
    default:
      e[j] = g.power % 6;
  }
  return e;
}

std::optional<std::array<int, 3>> local_permutation(const Gate& g) {
  switch (g.kind) {
    case GateKind::TAU01: return std::array<int, 3>{1, 0, 2};
    case GateKind::TAU02: return std::array<int, 3>{2, 1, 0};
    case GateKind::TAU12: return std::array<int, 3>{0, 2, 1};
    case GateKind::INC:
      return g.power == 2 ? std::array<int, 3>{2, 0, 1} : std::array<int, 3>{1, 2, 0};
    case GateKind::INC_DAG: return std::array<int, 3>{2, 0, 1};
    default: return std::nullopt;
  }
}

bool is_classical(GateKind k) {
  switch (k) {
    case GateKind::TAU01: case GateKind::TAU02: case GateKind::TAU12:
    case GateKind::INC: case GateKind::INC_DAG:
    case GateKind::SUM: case GateKind::SUM_DAG: case GateKind::SWAP: return true;
    default: return false;
  }
}

int gate_r_count(const Gate& g) {
  switch (g.kind) {
    case GateKind::R0: case GateKind::R1: case GateKind::R2: return 1;
    case GateKind::P0: case GateKind::P1: case GateKind::P2: return g.power % 2;
    default: return 0;
  }
}

Gate dagger(const Gate& g) {
  Gate d = g;
  switch (g.kind) {
    case GateKind::Q0: case GateKind::Q1: case GateKind::Q2:
    case GateKind::INC: case GateKind::S2:
      d.power = 3 - g.power;
      break;
    case GateKind::P0: case GateKind::P1: case GateKind::P2:
      d.power = 6 - g.power;
      break;
    case GateKind::INC_DAG: d.kind = GateKind::INC; d.power = 1; break;
    case GateKind::SUM: d.kind = GateKind::SUM_DAG; break;
    case GateKind::SUM_DAG: d.kind = GateKind::SUM; break;
    default: break;
  }
  return d;
}

std::string to_string(const Gate& g) {
  std::string s(gate_name(g.kind));
  if (g.power != 1) s += "^" + std::to_string(g.power);
  s += "(" + std::to_string(g.q0);
  if (g.q1 >= 0) s += "," + std::to_string(g.q1);
  return s + ")";
}

Gate q_gate(int j, int q, int power) {
  check_index(j);
  power = ((power % 3) + 3) % 3;
  if (power == 0) throw InputError("Q gate power must be 1 or 2");
  return {static_cast<GateKind>(static_cast<int>(GateKind::Q0) + j), power, q, -1};
}
Gate r_gate(int j, int q) {
  check_index(j);
  return {static_cast<GateKind>(static_cast<int>(GateKind::R0) + j), 1, q, -1};
}
Gate p_gate(int j, int q, int power) {
  check_index(j);
  power = ((power % 6) + 6) % 6;
  if (power == 0) throw InputError("P gate power must be in 1..5");
  return {static_cast<GateKind>(static_cast<int>(GateKind::P0) + j), power, q, -1};
}
Gate s2(int q, int power) { return {GateKind::S2, power, q, -1}; }
Gate inc(int q, int power) { return {GateKind::INC, power, q, -1}; }
Gate inc_dag(int q) { return {GateKind::INC_DAG, 1, q, -1}; }
Gate tau(int a, int b, int q) {
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return {GateKind::TAU01, 1, q, -1};
  if (a == 0 && b == 2) return {GateKind::TAU02, 1, q, -1};
  if (a == 1 && b == 2) return {GateKind::TAU12, 1, q, -1};
  throw InputError("invalid transposition");
}
Gate sum(int control, int target) { return {GateKind::SUM, 1, control, target}; }
Gate sum_dag(int control, int target) { return {GateKind::SUM_DAG, 1, control, target}; }
Gate swap_gate(int a, int b) { return {GateKind::SWAP, 1, a, b}; }

}  // namespace metaplectic
