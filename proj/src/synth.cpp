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

#include "metaplectic/synth.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <json.hpp>

#include "metaplectic/distance.hpp"
#include "metaplectic/error.hpp"
#include "metaplectic/random.hpp"

namespace metaplectic {

namespace {

double log3(double x) { return std::log(x) / std::log(3.0); }

// Copy of U carrying at least prec bits.
BigMatrix with_precision(const BigMatrix& U, long prec) {
  BigMatrix out(U.rows, U.cols, prec);
  for (std::size_t i = 0; i < U.data.size(); ++i) {
    out.data[i].re += U.data[i].re;
    out.data[i].im += U.data[i].im;
  }
  return out;
}

long working_precision(const BigMatrix& U, double eps) {
  long p = approx_precision_bits(eps);
  if (!U.data.empty()) p = std::max(p, U.data[0].precision());
  return p;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Two-level unitary w acting on basis states (a, b).
struct TwoLevelFactor {
  long a = 0, b = 0;
  BigComplex w00, w01, w10, w11;
};

TwoLevelFactor factor_from_reflection(const TwoLevelState& r, long prec) {
  ScopedPrecision sp(prec);
  const BigFloat two(2.0, prec);
  const BigComplex one(BigFloat(1.0, prec), BigFloat::zero(prec));
  TwoLevelFactor f;
  f.a = r.j;
  f.b = r.k;
  f.w00 = one - r.a * conj(r.a) * two;
  f.w01 = -(r.a * conj(r.b) * two);
  f.w10 = -(r.b * conj(r.a) * two);
  f.w11 = one - r.b * conj(r.b) * two;
  return f;
}

// Cumulative angles of the two-level diagonal decomposition.
std::vector<BigFloat> cumulative_angles(const std::vector<BigFloat>& phases, long prec) {
  ScopedPrecision sp(prec);
  BigFloat mean = BigFloat::zero(prec);
  for (const auto& t : phases) mean += t;
  mean /= BigFloat(static_cast<double>(phases.size()), prec);
  std::vector<BigFloat> out;
  BigFloat acc = BigFloat::zero(prec);
  for (std::size_t j = 1; j < phases.size(); ++j) {
    acc += phases[j - 1] - mean;
    out.push_back(acc);
  }
  return out;
}

struct Counter {
  long axial = 0;
};

// C^1(V): control qutrit 0 active on |2>, target qutrit 1.
Circuit c1_v(const BigMatrix& V, double eps, std::uint64_t seed, const SmoothnessPolicy& policy,
             Counter& count) {
  const long prec = std::max(V.data[0].precision(), approx_precision_bits(eps));
  ScopedPrecision sp(prec);
  HouseholderFactorization f = householder_factorize(with_precision(V, prec), 1);
  const double piece = eps / 7;
  Circuit c(2);

  // Phase e^{i phase} on the control's |2>, as a local diagonal.
  std::vector<BigFloat> ctrl{BigFloat::zero(prec), BigFloat::zero(prec), f.phase};
  c.append(diagonal_synthesize(ctrl, 1, 2 * piece, derive_seed(seed, 1), policy), {0});
  count.axial += diagonal_axial_count(ctrl, 1, 2 * piece);

  auto theta = cumulative_angles(f.diagonal, prec);
  for (int j = 0; j < 2; ++j) {
    c.append(two_level_diagonal(6 + j, 7 + j, theta[j], 2, piece, derive_seed(seed, 2 + j), policy));
    count.axial += two_level_diagonal_axial_count(theta[j], 2, piece);
  }
  for (std::size_t i = f.reflections.size(); i-- > 0;) {
    TwoLevelState r = f.reflections[i];
    r.n = 2;
    r.j += 6;
    r.k += 6;
    c.append(two_level_reflection(r, piece, derive_seed(seed, 10 + i), policy));
    count.axial += 1;
  }
  return c;
}

Circuit cn_v_impl(const BigMatrix& V, int m, double eps, std::uint64_t seed,
                  const SmoothnessPolicy& policy, Counter& count) {
  if (m < 1) throw InputError("cn_v_ancilla_assisted needs at least one control");
  if (V.rows != 3 || V.cols != 3) throw InputError("V must be 3x3");
  Circuit c(2 * m, m - 1);
  if (m == 1) {
    c.append(c1_v(V, eps, seed, policy, count));
    return c;
  }
  const double piece = eps / (4 * m - 3);
  const Circuit inc1 = c1inc_approx(piece, derive_seed(seed, 1), policy);
  Circuit inc1_dag(2);
  inc1_dag.add(tau(1, 2, 1)).append(inc1).add(tau(1, 2, 1));
  const int target = m;
  auto anc = [&](int i) { return m + i; };  // i = 1..m-1

  Circuit compute(2 * m);
  compute.append(inc1, {0, anc(1)});
  compute.append(inc1, {1, anc(1)});
  for (int i = 2; i <= m - 1; ++i) {
    compute.append(inc1, {anc(i - 1), anc(i)});
    compute.append(inc1, {i, anc(i)});
  }
  Circuit uncompute(2 * m);
  for (int i = m - 1; i >= 2; --i) {
    uncompute.append(inc1_dag, {i, anc(i)});
    uncompute.append(inc1_dag, {anc(i - 1), anc(i)});
  }
  uncompute.append(inc1_dag, {1, anc(1)});
  uncompute.append(inc1_dag, {0, anc(1)});

  Counter v_count;
  Circuit cv = c1_v(V, piece, derive_seed(seed, 2), policy, v_count);
  count.axial += 8L * (m - 1) + v_count.axial;
  c.append(compute);
  c.append(cv, {anc(m - 1), target});
  c.append(uncompute);
  return c;
}

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Auto: return "auto";
    case Flavor::AncillaFree: return "ancilla-free";
    case Flavor::AncillaAssisted: return "ancilla-assisted";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& s) {
  for (Flavor f : {Flavor::Auto, Flavor::AncillaFree, Flavor::AncillaAssisted})
    if (flavor_name(f) == s) return f;
  return std::nullopt;
}

std::string SynthesisReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["flavor"] = flavor_name(flavor);
  j["target_eps"] = target_eps;
  j["verified_distance"] = verified_distance ? nlohmann::ordered_json(*verified_distance) : nullptr;
  j["r_count"] = r_count;
  j["r_count_envelope"] = r_count_envelope;
  j["axial_reflection_count"] = axial_reflection_count;
  j["ancilla_count"] = ancilla_count;
  j["seed"] = seed;
  j["wall_time_ms"] = wall_time_ms;
  if (!candidates.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : candidates)
      arr.push_back({{"flavor", flavor_name(c.flavor)},
                     {"r_count", c.r_count},
                     {"axial_reflection_count", c.axial_reflection_count},
                     {"ancilla_count", c.ancilla_count}});
    j["candidates"] = arr;
  }
  return j.dump(2);
}

Circuit diagonal_synthesize(const std::vector<BigFloat>& phases, int n, double eps,
                            std::uint64_t seed, const SmoothnessPolicy& policy) {
  const long N = pow3(n);
  if (static_cast<long>(phases.size()) != N) throw InputError("need 3^n phases");
  const long prec = std::max(phases[0].precision(), approx_precision_bits(eps));
  auto theta = cumulative_angles(phases, prec);
  Circuit c(n);
  const double piece = eps / static_cast<double>(N - 1);
  for (long j = 1; j < N; ++j)
    c.append(two_level_diagonal(j - 1, j, theta[j - 1], n, piece,
                                derive_seed(seed, static_cast<std::uint64_t>(j)), policy));
  return c;
}

long diagonal_axial_count(const std::vector<BigFloat>& phases, int n, double eps) {
  const long N = pow3(n);
  const long prec = std::max(phases[0].precision(), approx_precision_bits(eps));
  auto theta = cumulative_angles(phases, prec);
  long total = 0;
  for (const auto& t : theta) total += two_level_diagonal_axial_count(t, n, eps / static_cast<double>(N - 1));
  return total;
}

std::optional<double> verify_circuit(const Circuit& c, const BigMatrix& U, double eps) {
  if (c.width > kVerifyCap) return std::nullopt;
  const int reg = c.width - c.ancillas;
  const long dim = pow3(reg), scale = pow3(c.ancillas), full = pow3(c.width);
  if (dim != U.rows) throw InputError("circuit register does not match the matrix dimension");
  // Compare the isometry on ancilla-zero inputs against U (x) |0..0>, so any
  // amplitude left on the ancillas counts against the distance.
  if (eps >= 1e-8) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(full, dim);
    for (long i = 0; i < dim; ++i) m(i * scale, i) = 1.0;
    apply_double(c, m);
    Eigen::MatrixXcd u = U.to_eigen();
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(full, dim);
    for (long r = 0; r < dim; ++r) target.row(r * scale) = u.row(r);
    return distance(m, target);
  }
  const long prec = working_precision(U, eps);
  BigMatrix m(full, dim, prec);
  for (long i = 0; i < dim; ++i) m(i * scale, i) = BigComplex(BigFloat(1.0, prec), BigFloat::zero(prec));
  apply_float(c, m);
  const BigMatrix u = with_precision(U, prec);
  BigMatrix target(full, dim, prec);
  for (long r = 0; r < dim; ++r)
    for (long col = 0; col < dim; ++col) target(r * scale, col) = u(r, col);
  return distance(m, target);
}

double ancilla_free_envelope(int n, double eps) {
  const double N = static_cast<double>(pow3(n));
  const double M = (N + 4) * (N - 1) / 2;
  return M * two_level_reflection_r_envelope(n, eps / M);
}

double ancilla_assisted_envelope(int n, double eps) {
  const double N = static_cast<double>(pow3(n));
  const double F = (N + 2) * (N - 1) / 2;
  const double m = n - 1;
  const double ef = eps / F;
  const double per = 8 * (m - 1) * two_level_reflection_r_envelope(2, ef / (2 * (4 * m - 3))) +
                     9 * two_level_reflection_r_envelope(2, ef / (14 * (4 * m - 3)));
  return F * per;
}

double ancilla_free_estimate(int n, double eps) {
  const double N = static_cast<double>(pow3(n));
  const double M2 = (N + 4) * (N - 1);
  return 4 * M2 * (log3(1 / eps) + 2 * n) + M2 / 2 * static_cast<double>(rc(std::min(n, 40)));
}

double ancilla_assisted_estimate(int n, double eps) {
  const double N = static_cast<double>(pow3(n));
  const double M2 = (N + 4) * (N - 1);
  return 32 * M2 * (n - 1) * (log3(1 / eps) + 2 * n);
}

Flavor choose_flavor(int n, double eps) {
  if (n < 1 || !(eps > 0)) throw InputError("choose_flavor needs n >= 1 and eps > 0");
  if (n == 1) return Flavor::AncillaFree;
  if (n > kAxialCap) return Flavor::AncillaAssisted;
  return ancilla_assisted_estimate(n, eps) < ancilla_free_estimate(n, eps) ? Flavor::AncillaAssisted
                                                                           : Flavor::AncillaFree;
}

SynthesisReport synthesize_ancilla_free(const BigMatrix& U_in, int n, double eps,
                                        std::uint64_t seed, const SynthesisOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(eps > 0 && eps < 1)) throw InputError("eps must lie in (0, 1)");
  if (n > kAxialCap) throw InputError("ancilla-free flavor is limited to " + std::to_string(kAxialCap) + " qutrits");
  const long prec = working_precision(U_in, eps);
  ScopedPrecision sp(prec);
  const BigMatrix U = with_precision(U_in, prec);
  HouseholderFactorization f = householder_factorize(U, n);

  const double N = static_cast<double>(pow3(n));
  const double M = (N + 4) * (N - 1) / 2;
  const double eps_r = eps / M, eps_d = eps * 2 * (N - 1) / M;

  SynthesisReport rep;
  rep.flavor = Flavor::AncillaFree;
  rep.target_eps = eps;
  rep.seed = seed;
  rep.circuit = Circuit(n);
  rep.circuit.append(diagonal_synthesize(f.diagonal, n, eps_d, derive_seed(seed, 0), opt.policy));
  rep.axial_reflection_count = diagonal_axial_count(f.diagonal, n, eps_d);
  for (std::size_t i = f.reflections.size(); i-- > 0;) {
    rep.circuit.append(two_level_reflection(f.reflections[i], eps_r, derive_seed(seed, i + 1), opt.policy));
    rep.axial_reflection_count += 1;
  }
  rep.r_count = r_count(rep.circuit);
  rep.r_count_envelope = ancilla_free_envelope(n, eps);
  if (opt.verify) rep.verified_distance = verify_circuit(rep.circuit, U, eps);
  rep.wall_time_ms = elapsed_ms(t0);
  return rep;
}

Circuit cn_v_ancilla_assisted(const BigMatrix& V, int n, double eps, std::uint64_t seed,
                              const SmoothnessPolicy& policy) {
  Counter count;
  return cn_v_impl(V, n, eps, seed, policy, count);
}

SynthesisReport synthesize_ancilla_assisted(const BigMatrix& U_in, int n, double eps,
                                            std::uint64_t seed, const SynthesisOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 2) throw InputError("ancilla-assisted flavor needs n >= 2; use the ancilla-free flavor");
  if (!(eps > 0 && eps < 1)) throw InputError("eps must lie in (0, 1)");
  const long prec = working_precision(U_in, eps);
  ScopedPrecision sp(prec);
  const BigMatrix U = with_precision(U_in, prec);
  HouseholderFactorization f = householder_factorize(U, n);
  const long N = pow3(n);

  // Time order: diagonal factors first, then H_m ... H_1.
  std::vector<TwoLevelFactor> factors;
  auto theta = cumulative_angles(f.diagonal, prec);
  for (long j = 1; j < N; ++j) {
    TwoLevelFactor d;
    d.a = j - 1;
    d.b = j;
    d.w00 = BigComplex::polar(theta[j - 1]);
    d.w11 = conj(d.w00);
    d.w01 = BigComplex::zero(prec);
    d.w10 = BigComplex::zero(prec);
    factors.push_back(d);
  }
  for (std::size_t i = f.reflections.size(); i-- > 0;)
    factors.push_back(factor_from_reflection(f.reflections[i], prec));

  const double ef = eps / static_cast<double>(factors.size());
  const int width = 2 * n - 2;
  SynthesisReport rep;
  rep.flavor = Flavor::AncillaAssisted;
  rep.target_eps = eps;
  rep.seed = seed;
  rep.ancilla_count = n - 2;
  rep.circuit = Circuit(width, n - 2);
  std::vector<int> reg_map(n);
  for (int q = 0; q < n; ++q) reg_map[q] = q;
  Counter count;
  const long all_twos = (pow3(n - 1) - 1) * 3;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const TwoLevelFactor& w = factors[i];
    // Skip factors already within their budget of the identity.
    {
      BigFloat dev = abs(w.w00 - BigComplex(1.0)) + abs(w.w11 - BigComplex(1.0)) + abs(w.w01) + abs(w.w10);
      if (dev < BigFloat(ef / 2, prec)) continue;
    }
    Circuit g = colocate_pair(w.a, w.b, n);
    const long a2 = classical_apply(g, w.a), b2 = classical_apply(g, w.b);
    const int d = static_cast<int>(a2 % 3), e = static_cast<int>(b2 % 3);
    Circuit p = basis_permutation((a2 / 3) * 3, all_twos, n);
    BigMatrix V = BigMatrix::identity(3, prec);
    V(d, d) = w.w00;
    V(d, e) = w.w01;
    V(e, d) = w.w10;
    V(e, e) = w.w11;
    Circuit cv = cn_v_impl(V, n - 1, ef, derive_seed(seed, i + 1), opt.policy, count);
    rep.circuit.append(g, reg_map);
    rep.circuit.append(p, reg_map);
    rep.circuit.append(cv);
    rep.circuit.append(dagger(p), reg_map);
    rep.circuit.append(dagger(g), reg_map);
  }
  rep.axial_reflection_count = count.axial;
  rep.r_count = r_count(rep.circuit);
  rep.r_count_envelope = ancilla_assisted_envelope(n, eps);
  if (opt.verify) rep.verified_distance = verify_circuit(rep.circuit, U, eps);
  rep.wall_time_ms = elapsed_ms(t0);
  return rep;
}

SynthesisReport synthesize(const BigMatrix& U, int n, double eps, Flavor flavor,
                           std::uint64_t seed, const SynthesisOptions& opt) {
  if (flavor == Flavor::AncillaFree) return synthesize_ancilla_free(U, n, eps, seed, opt);
  if (flavor == Flavor::AncillaAssisted) return synthesize_ancilla_assisted(U, n, eps, seed, opt);
  const auto t0 = std::chrono::steady_clock::now();
  if (n == 1) return synthesize_ancilla_free(U, n, eps, seed, opt);
  if (n > kAxialCap) return synthesize_ancilla_assisted(U, n, eps, seed, opt);
  // Each task sets its own thread-local precision.
  auto free_f = std::async(std::launch::async, [&] { return synthesize_ancilla_free(U, n, eps, seed, opt); });
  auto anc_f = std::async(std::launch::async, [&] { return synthesize_ancilla_assisted(U, n, eps, seed, opt); });
  std::vector<SynthesisReport> ok;
  std::exception_ptr first_error;
  for (auto* fut : {&anc_f, &free_f}) {
    try {
      ok.push_back(fut->get());
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (ok.empty()) std::rethrow_exception(first_error);
  // ok is in flavor-name order, so the first minimum wins ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < ok.size(); ++i)
    if (ok[i].r_count < ok[best].r_count) best = i;
  SynthesisReport rep = ok[best];
  for (const auto& r : ok)
    rep.candidates.push_back({r.flavor, r.r_count, r.axial_reflection_count, r.ancilla_count});
  rep.wall_time_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace metaplectic
