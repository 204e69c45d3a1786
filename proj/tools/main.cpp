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

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "metaplectic/approx.hpp"
#include "metaplectic/circuit_io.hpp"
#include "metaplectic/distance.hpp"
#include "metaplectic/error.hpp"
#include "metaplectic/exact.hpp"
#include "metaplectic/normeq.hpp"
#include "metaplectic/random.hpp"
#include "metaplectic/reflect.hpp"
#include "metaplectic/synth.hpp"

using namespace metaplectic;

namespace {

BigComplex parse_complex(const std::string& s, long prec) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    return BigComplex(BigFloat::parse(s, prec), BigFloat::zero(prec));
  return BigComplex(BigFloat::parse(s.substr(0, comma), prec),
                    BigFloat::parse(s.substr(comma + 1), prec));
}

std::vector<double> parse_eps_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InputError("bad eps value '" + item + "'");
    }
    if (!(out.back() > 0 && out.back() < 1)) throw InputError("eps must lie in (0, 1)");
  }
  if (out.empty()) throw InputError("empty eps list");
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text_file(path, text);
}

struct SynthArgs {
  std::string input, out, report, flavor = "auto", verify = "auto";
  double eps = 1e-3;
  std::uint64_t seed = 0;
};

int cmd_synthesize(const SynthArgs& a) {
  Flavor flavor;
  if (a.flavor == "free") flavor = Flavor::AncillaFree;
  else if (a.flavor == "ancilla") flavor = Flavor::AncillaAssisted;
  else if (auto f = flavor_from_name(a.flavor)) flavor = *f;
  else throw InputError("unknown flavor " + a.flavor);
  if (!(a.eps > 0 && a.eps < 1)) throw InputError("eps must lie in (0, 1)");
  const long prec = std::max(default_precision(), approx_precision_bits(a.eps));
  BigMatrix U = unitary_from_json(read_text_file(a.input), prec);
  int n = qutrits_for_dim(U.rows);
  if (n < 1) throw InputError("matrix dimension must be a power of 3");
  SynthesisOptions opt;
  opt.verify = a.verify != "off";
  SynthesisReport rep = synthesize(U, n, a.eps, flavor, a.seed, opt);
  if (a.verify == "on" && !rep.verified_distance)
    throw InputError("verification requested but the circuit is too wide to simulate");
  if (!a.out.empty()) write_text_file(a.out, circuit_to_text(rep.circuit));
  emit(a.report, rep.to_json() + "\n");
  if (rep.verified_distance && *rep.verified_distance > a.eps) {
    std::cerr << "verified distance " << *rep.verified_distance << " exceeds eps\n";
    return 1;
  }
  return 0;
}

struct BenchArgs {
  int targets = 100;
  std::string eps = "1e-2,1e-3,1e-4,1e-5,1e-6";
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  if (a.targets < 1) throw InputError("--targets must be positive");
  auto eps_list = parse_eps_list(a.eps);
  std::ostringstream csv;
  csv << "target,eps,k,r_count,distance\n";
  for (double eps : eps_list) {
    const long prec = approx_precision_bits(eps);
    ScopedPrecision sp(prec);
    for (int t = 0; t < a.targets; ++t) {
      const std::uint64_t s = derive_seed(a.seed, static_cast<std::uint64_t>(t));
      BigMatrix h = haar_unitary(2, s, prec);
      BigComplex x = h(0, 0), y = h(1, 0);
      EisensteinState st = approx_state_pair(x, y, eps, {}, s);
      TwoLevelState phi{1, 0, 1, x, y};
      Circuit c = two_level_state_prep(phi, eps, s);
      csv << t << ',' << eps << ',' << st.k << ',' << r_count(c) << ','
          << state_distance(st, x, y, prec).to_string(6) << '\n';
    }
  }
  emit(a.out, csv.str());
  return 0;
}

int cmd_verify(const std::string& circuit_path, const std::string& unitary_path,
               const std::string& exact_path) {
  Circuit c = circuit_from_text(read_text_file(circuit_path));
  if (c.width > kDefaultSimulationCap) throw InputError("circuit too wide to simulate");
  const long prec = default_precision();
  const int reg = c.width - c.ancillas;
  std::optional<double> d;
  if (!exact_path.empty()) {
    ExactMatrix target = exact_matrix_from_json(read_text_file(exact_path));
    if (c.ancillas != 0) throw InputError("exact comparison needs an ancilla-free circuit");
    ExactMatrix m = simulate_exact(c);
    if (m.rows != target.rows) throw InputError("dimension mismatch");
    d = equal_up_to_phase(m, target) ? 0.0 : distance(to_big(m, prec), to_big(target, prec));
  } else {
    BigMatrix U = unitary_from_json(read_text_file(unitary_path), prec);
    if (U.rows != pow3(reg)) throw InputError("dimension mismatch");
    if (c.ancillas == 0) {
      d = distance(to_big(simulate_exact(c), prec), U);
    } else {
      d = verify_circuit(c, U, 1e-9);
      if (!d) throw InputError("circuit too wide to simulate");
    }
  }
  std::cout << "distance: " << *d << "\nr_count: " << r_count(c) << "\n";
  return 0;
}

int cmd_normeq(const std::string& value) {
  BigInt n;
  if (n.set_str(value, 10) != 0 || n < 0) throw InputError("n must be a non-negative integer");
  auto sol = solve(n);
  if (sol) std::cout << sol->z.to_string() << "\n";
  else if (try_factor_semismooth(n)) std::cout << "unsolvable\n";
  else std::cout << "not semi-smooth\n";
  return 0;
}

int cmd_approx_state(const std::string& xs, const std::string& ys, double eps, std::uint64_t seed) {
  if (!(eps > 0 && eps < 1)) throw InputError("eps must lie in (0, 1)");
  const long prec = std::max(default_precision(), approx_precision_bits(eps));
  ScopedPrecision sp(prec);
  BigComplex x = parse_complex(xs, prec), y = parse_complex(ys, prec);
  EisensteinState s = approx_state_pair(x, y, eps, {}, seed);
  BigFloat n = sqrt(norm(x) + norm(y));
  std::cout << "u = " << s.u.to_string() << "\nv = " << s.v.to_string() << "\nw = "
            << s.w.to_string() << "\nk = " << s.k << "\ndistance = "
            << state_distance(s, x / n, y / n, prec).to_string(6) << "\n";
  return 0;
}

int cmd_exact_1q(const std::string& input, const std::string& out) {
  ExactMatrix m = exact_matrix_from_json(read_text_file(input));
  if (m.rows != 3 || m.cols != 3) throw InputError("exact-1q needs a 3x3 matrix");
  if (!is_unitary(m)) throw InputError("input not unitary");
  Circuit c = exact_synthesize_1q(m);
  ExactMatrix canon = m;
  canonicalize(canon);
  emit(out, circuit_to_text(c));
  std::cerr << "L = " << canon.L << ", r_count = " << r_count(c) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* p = std::getenv("METAPLECTIC_PRECISION_BITS")) {
    long bits = std::strtol(p, nullptr, 10);
    if (bits < 64) {
      std::cerr << "error: METAPLECTIC_PRECISION_BITS must be at least 64\n";
      return 2;
    }
    set_default_precision(bits);
  }

  CLI::App app{"Metaplectic qutrit circuit compiler"};
  app.require_subcommand(1);

  SynthArgs sa;
  auto* syn = app.add_subcommand("synthesize", "Compile a unitary into a metaplectic circuit");
  syn->add_option("--input", sa.input, "Unitary JSON file")->required();
  syn->add_option("--eps", sa.eps, "Target precision");
  syn->add_option("--flavor", sa.flavor, "auto | free | ancilla");
  syn->add_option("--seed", sa.seed, "Random seed");
  syn->add_option("--verify", sa.verify, "on | off | auto");
  syn->add_option("--out", sa.out, "Circuit output file");
  syn->add_option("--report", sa.report, "Report JSON file (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Approximation sweep over random two-level targets");
  bench->add_option("--targets", ba.targets, "Targets per eps");
  bench->add_option("--eps", ba.eps, "Comma-separated eps values");
  bench->add_option("--seed", ba.seed, "Random seed");
  bench->add_option("--out", ba.out, "CSV output file (default stdout)");

  std::string v_circuit, v_unitary, v_exact;
  auto* ver = app.add_subcommand("verify", "Distance between a circuit and a unitary");
  ver->add_option("--circuit", v_circuit, "Circuit file")->required();
  auto* vu = ver->add_option("--unitary", v_unitary, "Unitary JSON file");
  auto* ve = ver->add_option("--exact", v_exact, "Exact matrix JSON file");
  vu->excludes(ve);
  ve->excludes(vu);

  std::string ne_n;
  auto* ne = app.add_subcommand("normeq", "Solve |z|^2 = n over the Eisenstein integers");
  ne->add_option("n", ne_n, "Non-negative integer")->required();

  std::string ax, ay;
  double aeps = 1e-3;
  std::uint64_t aseed = 0;
  auto* as = app.add_subcommand("approx-state", "Approximate x|0> + y|1>");
  as->add_option("--x", ax, "re,im")->required();
  as->add_option("--y", ay, "re,im")->required();
  as->add_option("--eps", aeps, "Target precision");
  as->add_option("--seed", aseed, "Random seed");

  std::string e_in, e_out;
  auto* ex = app.add_subcommand("exact-1q", "Exact synthesis of a single-qutrit matrix");
  ex->add_option("--input", e_in, "Exact matrix JSON file")->required();
  ex->add_option("--out", e_out, "Circuit output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*syn) return cmd_synthesize(sa);
    if (*bench) return cmd_bench(ba);
    if (*ver) {
      if (v_unitary.empty() && v_exact.empty()) throw InputError("verify needs --unitary or --exact");
      return cmd_verify(v_circuit, v_unitary, v_exact);
    }
    if (*ne) return cmd_normeq(ne_n);
    if (*as) return cmd_approx_state(ax, ay, aeps, aseed);
    if (*ex) return cmd_exact_1q(e_in, e_out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SynthesisError& e) {
    std::cerr << "synthesis failed: " << e.what() << "\n";
    for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
