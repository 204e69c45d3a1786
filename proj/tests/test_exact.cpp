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

#include <doctest.h>

#include "metaplectic/error.hpp"
#include "metaplectic/exact.hpp"
#include "metaplectic/random.hpp"

using namespace metaplectic;

namespace {

// Applies c to the column and checks the result is |target> up to a phase.
bool maps_to_basis(const Circuit& c, std::vector<EisensteinInt> col, long L, int target) {
  ExactMatrix m = ExactMatrix::column(std::move(col), L);
  apply_exact(c, m);
  canonicalize(m);
  if (m.L != 0) return false;
  for (int r = 0; r < 3; ++r) {
    const auto& z = m(r, 0);
    if (r == target ? !unit_index(z).has_value() : !z.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("worked example column reduces with two R gates") {
  // ((2 + i sqrt3)|0> + |1> + |2>) / 3, and 2 + i sqrt3 = 3 + 2w.
  const EisensteinInt u(3, 2);
  Circuit c = reduce_short_column(u, 1, 1, 2);
  CHECK(r_count(c) == 2);
  CHECK(maps_to_basis(c, {u, 1, 1}, 2, 0));
}

TEST_CASE("case split") {
  CHECK(case_split(EisensteinInt(3, 2), 1, 1, 2) == ColumnCase::Case1);
  // (1 + 2w) * (1, 1, 1) / sqrt(-3)^2: every norm divisible by 3.
  const EisensteinInt s = EisensteinInt::sqrt_minus3();
  CHECK(case_split(s, s, s, 1) == ColumnCase::Case0);
}

TEST_CASE("unit entry states") {
  for (int pos = 0; pos < 3; ++pos)
    for (int d = 0; d < 6; ++d) {
      std::vector<EisensteinInt> col(3);
      col[static_cast<std::size_t>(pos)] = unit_pow(d);
      Circuit c = reduce_unit_entry_state(col[0], col[1], col[2]);
      CHECK(r_count(c) == 0);
      CHECK(maps_to_basis(c, col, 0, 0));
    }
  CHECK_THROWS(reduce_unit_entry_state(1, 1, 0));
}

TEST_CASE("random columns reduce within L + 1") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Circuit gen = random_1q_circuit(static_cast<int>(seed % 25), seed);
    ExactMatrix m = simulate_exact(gen);
    canonicalize(m);
    std::vector<EisensteinInt> col{m(0, 0), m(1, 0), m(2, 0)};
    Circuit c = reduce_short_column(col[0], col[1], col[2], m.L);
    CHECK(r_count(c) <= m.L + 1);
    CHECK(maps_to_basis(c, col, m.L, 0));
  }
}

TEST_CASE("two-entry columns") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Circuit gen = random_1q_circuit(static_cast<int>(seed % 12), seed + 77);
    ExactMatrix m = simulate_exact(gen);
    canonicalize(m);
    Circuit first = reduce_short_column(m(0, 0), m(1, 0), m(2, 0), m.L);
    ExactMatrix rest = m;
    apply_exact(first, rest);
    canonicalize(rest);
    // Column 1 of the reduced matrix is orthogonal to |0>.
    REQUIRE(rest(0, 1).is_zero());
    Circuit c = reduce_two_entry_column(rest(1, 1), rest(2, 1), rest.L);
    CHECK(maps_to_basis(c, {0, rest(1, 1), rest(2, 1)}, rest.L, 1));
    CHECK(r_count(c) <= 1);
  }
}

TEST_CASE("single-qutrit resynthesis round trip") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Circuit gen = random_1q_circuit(static_cast<int>(seed % 31), seed + 1234);
    ExactMatrix m = simulate_exact(gen);
    canonicalize(m);
    Circuit c = exact_synthesize_1q(m);
    CHECK(r_count(c) <= m.L + 3);
    CHECK(equal_up_to_phase(simulate_exact(c), m));
  }
}

TEST_CASE("clifford s2 needs no R gate") {
  Circuit s(1);
  s.add(s2(0));
  Circuit c = exact_synthesize_1q(simulate_exact(s));
  CHECK(r_count(c) == 0);
  CHECK(equal_up_to_phase(simulate_exact(c), simulate_exact(s)));
}

TEST_CASE("rejects non-unitary input") {
  ExactMatrix m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = 2;
  CHECK_THROWS_AS(exact_synthesize_1q(m), InputError);
}

}  // TEST_SUITE
