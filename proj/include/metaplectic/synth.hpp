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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metaplectic/householder.hpp"

namespace metaplectic {

enum class Flavor { Auto, AncillaFree, AncillaAssisted };

std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& s);

/// Simulation-based verification is skipped above this many qutrits
/// (register plus ancillas).
constexpr int kVerifyCap = 6;

struct FlavorCounts {
  Flavor flavor = Flavor::AncillaFree;
  long r_count = 0;
  long axial_reflection_count = 0;
  int ancilla_count = 0;
};

struct SynthesisReport {
  Circuit circuit;
  Flavor flavor = Flavor::AncillaFree;
  double target_eps = 0;
  std::optional<double> verified_distance;
  long r_count = 0;
  long axial_reflection_count = 0;
  int ancilla_count = 0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0;
  /// R-count upper bound the result is checked against.
  double r_count_envelope = 0;
  /// Per-flavor counts when both flavors ran.
  std::vector<FlavorCounts> candidates;

  std::string to_json() const;
};

struct SynthesisOptions {
  bool verify = true;
  SmoothnessPolicy policy{};
};

/// Diagonal diag(e^{i phases_j}) up to global phase, within eps.
Circuit diagonal_synthesize(const std::vector<BigFloat>& phases, int n, double eps,
                            std::uint64_t seed, const SmoothnessPolicy& policy = {});
/// Axial reflections diagonal_synthesize will emit.
long diagonal_axial_count(const std::vector<BigFloat>& phases, int n, double eps);

SynthesisReport synthesize_ancilla_free(const BigMatrix& U, int n, double eps,
                                        std::uint64_t seed, const SynthesisOptions& opt = {});

/// n controls (qutrits 0..n-1, active on |2>), target n, ancillas n+1..2n-1.
/// V is a 3x3 unitary.
Circuit cn_v_ancilla_assisted(const BigMatrix& V, int n, double eps, std::uint64_t seed,
                              const SmoothnessPolicy& policy = {});

SynthesisReport synthesize_ancilla_assisted(const BigMatrix& U, int n, double eps,
                                            std::uint64_t seed, const SynthesisOptions& opt = {});

/// Cheaper flavor by the two analytic R-count estimates.
Flavor choose_flavor(int n, double eps);

/// Analytic estimates compared by choose_flavor.
double ancilla_free_estimate(int n, double eps);
double ancilla_assisted_estimate(int n, double eps);

/// Concrete R-count envelopes asserted by the tests.
double ancilla_free_envelope(int n, double eps);
double ancilla_assisted_envelope(int n, double eps);

/// Flavor::Auto runs both flavors (n >= 2) concurrently and keeps the lower
/// R-count, ties going to the alphabetically first flavor name.
SynthesisReport synthesize(const BigMatrix& U, int n, double eps, Flavor flavor,
                           std::uint64_t seed, const SynthesisOptions& opt = {});

/// Distance between the circuit's action on the register (ancillas in and out
/// of |0>) and U. Nothing when the circuit is too wide to simulate.
std::optional<double> verify_circuit(const Circuit& c, const BigMatrix& U, double eps);

}  // namespace metaplectic
