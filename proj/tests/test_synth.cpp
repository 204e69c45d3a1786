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

#include <cmath>
#include <json.hpp>

#include "metaplectic/circuit_io.hpp"
#include "metaplectic/distance.hpp"
#include "metaplectic/error.hpp"
#include "metaplectic/random.hpp"
#include "metaplectic/synth.hpp"

using namespace metaplectic;

namespace {

constexpr long kPrec = 128;

BigFloat bf(double x) { return BigFloat(x, kPrec); }

Eigen::MatrixXcd diag_of(const std::vector<double>& phases) {
  Eigen::VectorXcd d(static_cast<long>(phases.size()));
  for (std::size_t i = 0; i < phases.size(); ++i) d(static_cast<long>(i)) = std::polar(1.0, phases[i]);
  return d.asDiagonal();
}

// Identity on 3^(m+1) states except V on the target when every control is |2>.
BigMatrix controlled(const BigMatrix& V, int m) {
  const long dim = pow3(m + 1), base = (pow3(m) - 1) * 3;
  BigMatrix u = BigMatrix::identity(dim, kPrec);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) u(base + r, base + c) = V(r, c);
  return u;
}

void check_report(const SynthesisReport& rep, double eps) {
  REQUIRE(rep.verified_distance.has_value());
  CHECK(*rep.verified_distance <= eps);
  CHECK(static_cast<double>(rep.r_count) <= rep.r_count_envelope);
  CHECK(rep.r_count == r_count(rep.circuit));
  CHECK(rep.ancilla_count == rep.circuit.ancillas);
}

}  // namespace

TEST_SUITE("synth") {

TEST_CASE("flavor names") {
  for (Flavor f : {Flavor::Auto, Flavor::AncillaFree, Flavor::AncillaAssisted})
    CHECK(flavor_from_name(flavor_name(f)) == f);
  CHECK_FALSE(flavor_from_name("bogus").has_value());
}

TEST_CASE("diagonal synthesis") {
  CHECK(diagonal_synthesize({bf(0.4), bf(0.4), bf(0.4)}, 1, 1e-3, 1).empty());

  Circuit c1 = diagonal_synthesize({bf(0), bf(0.3), bf(-0.3)}, 1, 1e-4, 2);
  CHECK(distance(simulate_double(c1), diag_of({0, 0.3, -0.3})) < 1e-4);

  std::vector<double> ph{0.1, -1.2, 2.5, 0.7, -0.4, 3.0, 1.1, -2.9, 0.05};
  std::vector<BigFloat> phb;
  for (double p : ph) phb.push_back(bf(p));
  Circuit c2 = diagonal_synthesize(phb, 2, 1e-3, 3);
  CHECK(distance(simulate_double(c2), diag_of(ph)) < 1e-3);
  CHECK(diagonal_axial_count(phb, 2, 1e-3) <= 16);
}

TEST_CASE("ancilla-free flavor") {
  SUBCASE("identity gives an empty circuit") {
    auto rep = synthesize_ancilla_free(BigMatrix::identity(3, kPrec), 1, 1e-3, 0);
    CHECK(rep.circuit.empty());
    check_report(rep, 1e-3);
  }
  SUBCASE("s2") {
    Circuit s(1);
    s.add(s2(0));
    auto rep = synthesize_ancilla_free(to_big(simulate_exact(s), kPrec), 1, 1e-3, 0);
    check_report(rep, 1e-3);
  }
  SUBCASE("random U(3)") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto rep = synthesize_ancilla_free(haar_unitary(3, seed, kPrec), 1, 1e-3, seed);
      check_report(rep, 1e-3);
      CHECK(rep.ancilla_count == 0);
    }
  }
  SUBCASE("random U(9)") {
    auto rep = synthesize_ancilla_free(haar_unitary(9, 42, kPrec), 2, 1e-2, 42);
    check_report(rep, 1e-2);
    CHECK(rep.axial_reflection_count <= (9 + 4) * (9 - 1) / 2);
  }
}

TEST_CASE("controlled-V networks") {
  SUBCASE("one control, V = INC") {
    BigMatrix v(3, 3, kPrec);
    for (int t = 0; t < 3; ++t) v((t + 1) % 3, t) = BigComplex(1.0);
    Circuit c = cn_v_ancilla_assisted(v, 1, 1e-3, 1);
    CHECK(c.ancillas == 0);
    auto d = verify_circuit(c, controlled(v, 1), 1e-3);
    REQUIRE(d.has_value());
    CHECK(*d < 1e-3);
  }
  SUBCASE("two controls, V = R2, one ancilla") {
    BigMatrix v = BigMatrix::identity(3, kPrec);
    v(2, 2) = BigComplex(-1.0);
    Circuit c = cn_v_ancilla_assisted(v, 2, 1e-2, 2);
    CHECK(c.width == 4);
    CHECK(c.ancillas == 1);
    auto d = verify_circuit(c, controlled(v, 2), 1e-2);
    REQUIRE(d.has_value());
    CHECK(*d < 1e-2);
  }
  SUBCASE("identity V") {
    Circuit c = cn_v_ancilla_assisted(BigMatrix::identity(3, kPrec), 2, 1e-2, 3);
    auto d = verify_circuit(c, BigMatrix::identity(27, kPrec), 1e-2);
    REQUIRE(d.has_value());
    CHECK(*d < 1e-2);
  }
}

TEST_CASE("ancilla-assisted flavor") {
  SUBCASE("identity") {
    auto rep = synthesize_ancilla_assisted(BigMatrix::identity(9, kPrec), 2, 1e-2, 0);
    CHECK(rep.circuit.empty());
  }
  SUBCASE("random U(9)") {
    auto rep = synthesize_ancilla_assisted(haar_unitary(9, 7, kPrec), 2, 1e-2, 7);
    check_report(rep, 1e-2);
    CHECK(rep.ancilla_count == 0);
  }
  SUBCASE("n = 1 is rejected") {
    CHECK_THROWS_AS(synthesize_ancilla_assisted(BigMatrix::identity(3, kPrec), 1, 1e-2, 0),
                    InputError);
    CHECK_THROWS_AS(synthesize(BigMatrix::identity(3, kPrec), 1, 1e-2, Flavor::AncillaAssisted, 0),
                    InputError);
  }
}

TEST_CASE("flavor choice") {
  CHECK(choose_flavor(1, 1e-2) == Flavor::AncillaFree);
  CHECK(choose_flavor(8, 1e-2) == Flavor::AncillaAssisted);
  CHECK(choose_flavor(9, 1e-2) == Flavor::AncillaAssisted);
  // Crossover for three qutrits: the free flavor wins at loose eps.
  CHECK(choose_flavor(3, 1e-2) == Flavor::AncillaFree);
  // Below the crossover eps the free flavor's smaller log coefficient wins.
  for (int n = 2; n <= 8; ++n) {
    double cross = 0;
    for (double e = 1e-1; e > 1e-300; e *= 1e-1)
      if (choose_flavor(n, e) == Flavor::AncillaFree) {
        cross = e;
        break;
      }
    MESSAGE("n=" << n << " ancilla-free preferred from eps=" << cross);
    CHECK(choose_flavor(n, cross / 10) == Flavor::AncillaFree);
  }
}

TEST_CASE("auto runs both flavors and keeps the lower R-count") {
  BigMatrix u = haar_unitary(9, 11, kPrec);
  auto rep = synthesize(u, 2, 1e-2, Flavor::Auto, 11);
  REQUIRE(rep.candidates.size() == 2);
  long best = std::min(rep.candidates[0].r_count, rep.candidates[1].r_count);
  CHECK(rep.r_count == best);
  check_report(rep, 1e-2);
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["schema"] == 1);
  CHECK(j["candidates"].size() == 2);
}

TEST_CASE("synthesis is deterministic") {
  BigMatrix u = haar_unitary(3, 5, kPrec);
  auto a = synthesize(u, 1, 1e-3, Flavor::AncillaFree, 9);
  auto b = synthesize(u, 1, 1e-3, Flavor::AncillaFree, 9);
  CHECK(circuit_to_text(a.circuit) == circuit_to_text(b.circuit));
}

TEST_CASE("non-unitary input is rejected") {
  BigMatrix u = BigMatrix::identity(3, kPrec);
  u(0, 0) = BigComplex(2.0);
  CHECK_THROWS_AS(synthesize(u, 1, 1e-2, Flavor::AncillaFree, 0), InputError);
}

TEST_CASE("envelopes grow as eps shrinks") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(ancilla_free_envelope(n, 1e-4) > ancilla_free_envelope(n, 1e-2));
    if (n >= 2) CHECK(ancilla_assisted_envelope(n, 1e-4) > ancilla_assisted_envelope(n, 1e-2));
  }
}

}  // TEST_SUITE
