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

#include "metaplectic/exact.hpp"

#include <array>

#include "metaplectic/error.hpp"

namespace metaplectic {

namespace {

using Column = std::array<EisensteinInt, 3>;

BigInt pow3_big(long L) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(L));
  return r;
}

void require_unitary(const Column& col, long L) {
  if (L < 0) throw InputError("denominator exponent must be non-negative");
  BigInt s = norm(col[0]) + norm(col[1]) + norm(col[2]);
  if (s != pow3_big(L)) throw InputError("column is not unitary");
}

bool all_divisible(const Column& col) {
  for (const auto& z : col)
    if (!divide_by_sqrt_minus3(z)) return false;
  return true;
}

void divide_all(Column& col) {
  for (auto& z : col) {
    auto q = divide_by_sqrt_minus3(z);
    METAPLECTIC_CHECK(q.has_value(), "entry not divisible by sqrt(-3)");
    z = *q;
  }
}

void add_all(Circuit& c, const std::vector<Gate>& gates) {
  for (const Gate& g : gates) c.add(g);
}

}  // namespace

Circuit reduce_unit_entry_state(const EisensteinInt& u, const EisensteinInt& v,
                                const EisensteinInt& w) {
  Column col{u, v, w};
  int nz = -1;
  for (int j = 0; j < 3; ++j) {
    if (col[j].is_zero()) continue;
    if (nz >= 0) throw InputError("more than one nonzero entry");
    nz = j;
  }
  if (nz < 0) throw InputError("zero state");
  if (!unit_index(col[nz])) throw InputError("nonzero entry is not a unit");
  Circuit c(1);
  // The remaining unit is a global phase.
  if (nz != 0) c.add(tau(0, nz, 0));
  return c;
}

ColumnCase case_split(const EisensteinInt& u, const EisensteinInt& v, const EisensteinInt& w,
                      long L) {
  if (L <= 0) throw InputError("case_split needs L > 0");
  int r0 = reduced_norm(residue(u)), r1 = reduced_norm(residue(v)), r2 = reduced_norm(residue(w));
  if (r0 == 0 && r1 == 0 && r2 == 0) return ColumnCase::Case0;
  if (r0 == 1 && r1 == 1 && r2 == 1) return ColumnCase::Case1;
  throw InvariantViolation("mixed residues in column (" + u.to_string() + ", " + v.to_string() +
                           ", " + w.to_string() + ")");
}

Circuit reduce_short_column(const EisensteinInt& u, const EisensteinInt& v,
                            const EisensteinInt& w, long L) {
  Column col{u, v, w};
  require_unitary(col, L);
  Circuit c(1);
  const EisensteinInt w2 = EisensteinInt(-1, -1);  // omega^2
  const EisensteinInt om = EisensteinInt::omega();
  while (L > 0) {
    const long before = L;
    if (case_split(col[0], col[1], col[2], L) == ColumnCase::Case0) {
      divide_all(col);
      --L;
    } else {
      Residue3 target = residue(w2 * col[0]);
      auto dv = unit_exponent_matching(target, residue(col[1]));
      auto dw = unit_exponent_matching(target, residue(col[2]));
      METAPLECTIC_CHECK(dv && dw, "no unit matches residue");
      col[1] = mul_unit(col[1], *dv);
      col[2] = mul_unit(col[2], *dw);
      add_all(c, diagonal_gates({0, *dv, *dw}, 0));
      c.add(s2(0));
      // s2 contributes one sqrt(-3) to the denominator; the sum below is
      // divisible by -3, so the net exponent drops by one.
      Column next{col[0] + om * (col[1] + col[2]), col[1] + om * (col[0] + col[2]),
                  col[2] + om * (col[0] + col[1])};
      for (int j = 0; j < 3; ++j) {
        auto q = divide_exact(next[j], EisensteinInt(-3));
        METAPLECTIC_CHECK(q.has_value(), "Case1 step not divisible by 3");
        col[j] = *q;
      }
      --L;
    }
    METAPLECTIC_CHECK(L < before, "denominator exponent did not decrease");
  }
  Circuit tail = reduce_unit_entry_state(col[0], col[1], col[2]);
  c.append(tail);
  return c;
}

Circuit reduce_two_entry_column(const EisensteinInt& v, const EisensteinInt& w, long L) {
  Column col{EisensteinInt(0), v, w};
  require_unitary(col, L);
  while (L > 0) {
    METAPLECTIC_CHECK(all_divisible(col), "two-entry column not divisible by sqrt(-3)");
    divide_all(col);
    --L;
  }
  Circuit c(1);
  int pos = col[1].is_zero() ? 2 : 1;
  METAPLECTIC_CHECK(col[3 - pos].is_zero(), "two-entry column has two units");
  auto d = unit_index(col[pos]);
  METAPLECTIC_CHECK(d.has_value(), "two-entry column did not reduce to a unit");
  if (pos == 2) c.add(tau(1, 2, 0));
  int p = (6 - *d) % 6;
  if (p != 0) c.add(p_gate(1, 0, p));
  return c;
}

Circuit exact_synthesize_1q(const ExactMatrix& m) {
  if (m.rows != 3 || m.cols != 3) throw InputError("exact_synthesize_1q needs a 3x3 matrix");
  if (!is_unitary(m)) throw InputError("input not unitary");
  ExactMatrix a = m;
  canonicalize(a);

  Circuit total = reduce_short_column(a(0, 0), a(1, 0), a(2, 0), a.L);
  apply_exact(total, a);
  canonicalize(a);
  METAPLECTIC_CHECK(a(1, 0).is_zero() && a(2, 0).is_zero() && a(0, 1).is_zero(),
                    "first column not reduced");

  Circuit second = reduce_two_entry_column(a(1, 1), a(2, 1), a.L);
  apply_exact(second, a);
  canonicalize(a);
  total.append(second);

  METAPLECTIC_CHECK(a.L == 0, "residual is not a unit diagonal");
  std::array<int, 3> e{};
  for (int j = 0; j < 3; ++j) {
    auto d = unit_index(a(j, j));
    METAPLECTIC_CHECK(d.has_value(), "residual diagonal entry is not a unit");
    e[j] = (6 - *d) % 6;
  }
  add_all(total, diagonal_gates(e, 0));

  Circuit out = dagger(total);
  METAPLECTIC_CHECK(equal_up_to_phase(simulate_exact(out), m), "resynthesized matrix differs");
  return out;
}

}  // namespace metaplectic
