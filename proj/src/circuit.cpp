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

#include "metaplectic/circuit.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "metaplectic/error.hpp"

namespace metaplectic {

Circuit& Circuit::add(const Gate& g) {
  if (g.q0 < 0 || g.q0 >= width)
    throw InputError("gate " + to_string(g) + " outside circuit width " + std::to_string(width));
  if (is_two_qutrit(g.kind)) {
    if (g.q1 < 0 || g.q1 >= width || g.q1 == g.q0)
      throw InputError("bad second qutrit in " + to_string(g));
  } else if (g.q1 != -1) {
    throw InputError("single-qutrit gate with two targets: " + to_string(g));
  }
  if (g.power < 1 || g.power > max_power(g.kind))
    throw InputError("power out of range in " + to_string(g));
  gates.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& c, const std::vector<int>& map) {
  if (!map.empty() && static_cast<int>(map.size()) < c.width)
    throw InputError("qutrit map shorter than appended circuit width");
  gates.reserve(gates.size() + c.gates.size());
  for (Gate g : c.gates) {
    if (!map.empty()) {
      g.q0 = map[g.q0];
      if (g.q1 >= 0) g.q1 = map[g.q1];
    }
    add(g);
  }
  return *this;
}

Circuit& Circuit::append_shifted(const Circuit& c, int offset) {
  std::vector<int> map(c.width);
  for (int i = 0; i < c.width; ++i) map[i] = offset + i;
  return append(c, map);
}

Circuit dagger(const Circuit& c) {
  Circuit d(c.width, c.ancillas);
  d.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) d.gates.push_back(dagger(*it));
  return d;
}

long syntactic_r_count(const Circuit& c) {
  long n = 0;
  for (const Gate& g : c.gates) n += gate_r_count(g);
  return n;
}

namespace {

// Emits a diagonal diag((-w^2)^e) with at most one R gate, dropping a
// global phase.
void emit_diagonal(std::array<int, 3> e, int q, std::vector<Gate>& out) {
  int odd = (e[0] & 1) + (e[1] & 1) + (e[2] & 1);
  int major = odd >= 2 ? 1 : 0;
  for (int& x : e) x = ((x - 3 * major) % 6 + 6) % 6;
  for (int j = 0; j < 3; ++j) {
    if (e[j] & 1) {
      out.push_back(r_gate(j, q));
      e[j] = (e[j] + 3) % 6;
    }
  }
  for (int j = 0; j < 3; ++j) {
    int p = (e[j] / 2) % 3;
    if (p != 0) out.push_back(q_gate(j, q, p));
  }
}

}  // namespace

Circuit normalize(const Circuit& c) {
  Circuit out(c.width, c.ancillas);
  std::vector<std::array<int, 3>> run(c.width, {0, 0, 0});
  std::vector<char> open(c.width, 0);
  auto flush = [&](int q) {
    if (!open[q]) return;
    emit_diagonal(run[q], q, out.gates);
    run[q] = {0, 0, 0};
    open[q] = 0;
  };
  for (const Gate& g : c.gates) {
    if (is_diagonal(g.kind)) {
      auto e = diagonal_exponents(g);
      for (int j = 0; j < 3; ++j) run[g.q0][j] = (run[g.q0][j] + e[j]) % 6;
      open[g.q0] = 1;
      continue;
    }
    flush(g.q0);
    if (g.q1 >= 0) flush(g.q1);
    out.gates.push_back(g);
  }
  for (int q = 0; q < c.width; ++q) flush(q);
  return out;
}

std::vector<Gate> diagonal_gates(std::array<int, 3> e, int q) {
  for (int& x : e) x = ((x % 6) + 6) % 6;
  std::vector<Gate> out;
  emit_diagonal(e, q, out);
  return out;
}

long r_count(const Circuit& c) { return syntactic_r_count(normalize(c)); }

long entangling_count(const Circuit& c) {
  return std::count_if(c.gates.begin(), c.gates.end(),
                       [](const Gate& g) { return is_two_qutrit(g.kind); });
}

Perm9 classical_permutation(const Gate& g) {
  if (!is_classical(g.kind)) throw InputError("not a classical gate: " + to_string(g));
  Perm9 p{};
  for (int idx = 0; idx < 9; ++idx) {
    int d[2] = {idx / 3, idx % 3};
    if (is_two_qutrit(g.kind)) {
      int& c = d[g.q0];
      int& t = d[g.q1];
      if (g.kind == GateKind::SUM) t = (t + c) % 3;
      else if (g.kind == GateKind::SUM_DAG) t = (t - c + 3) % 3;
      else std::swap(c, t);
    } else {
      d[g.q0] = (*local_permutation(g))[d[g.q0]];
    }
    p[idx] = d[0] * 3 + d[1];
  }
  return p;
}

std::vector<Perm9> default_classical_generators() {
  std::vector<Perm9> gens{classical_permutation(sum(0, 1)), classical_permutation(swap_gate(0, 1))};
  for (int q = 0; q < 2; ++q) {
    for (Gate g : {tau(0, 1, q), tau(0, 2, q), tau(1, 2, q), inc(q)})
      gens.push_back(classical_permutation(g));
  }
  return gens;
}

std::size_t classical_group_order(const std::vector<Perm9>& gens) {
  Perm9 id{};
  for (int i = 0; i < 9; ++i) id[i] = i;
  std::set<Perm9> seen{id};
  std::deque<Perm9> queue{id};
  while (!queue.empty()) {
    Perm9 cur = queue.front();
    queue.pop_front();
    for (const Perm9& g : gens) {
      Perm9 next{};
      for (int i = 0; i < 9; ++i) next[i] = g[cur[i]];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

std::size_t classical_group_order() {
  return classical_group_order(default_classical_generators());
}

}  // namespace metaplectic
