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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metaplectic/approx.hpp"
#include "metaplectic/circuit_io.hpp"
#include "metaplectic/distance.hpp"
#include "metaplectic/error.hpp"
#include "metaplectic/exact.hpp"
#include "metaplectic/normeq.hpp"
#include "metaplectic/reflect.hpp"
#include "metaplectic/synth.hpp"

namespace py = pybind11;
using namespace metaplectic;

namespace {

py::tuple eis_tuple(const EisensteinInt& z) {
  return py::make_tuple(py::int_(py::str(z.a.get_str())), py::int_(py::str(z.b.get_str())));
}

Flavor parse_flavor(const std::string& s) {
  if (s == "free") return Flavor::AncillaFree;
  if (s == "ancilla") return Flavor::AncillaAssisted;
  if (auto f = flavor_from_name(s)) return *f;
  throw InputError("unknown flavor " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qutrit circuit synthesis over the metaplectic gate set";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SynthesisError>(m, "SynthesisError", PyExc_RuntimeError);

  m.def("solve_norm", [](const std::string& n) -> py::object {
    BigInt v;
    if (v.set_str(n, 10) != 0) throw InputError("not an integer: " + n);
    auto s = solve(v);
    if (!s) return py::none();
    return eis_tuple(s->z);
  }, py::arg("n"), "Eisenstein integer (a, b) with a^2 - ab + b^2 = n, or None. n is a decimal string.");

  m.def("approx_state", [](std::complex<double> x, std::complex<double> y, double eps,
                           std::uint64_t seed) {
    const long prec = approx_precision_bits(eps);
    ScopedPrecision sp(prec);
    BigComplex bx(x, prec), by(y, prec);
    BigFloat n = sqrt(norm(bx) + norm(by));
    bx = bx / n;
    by = by / n;
    EisensteinState s = approx_state_pair(bx, by, eps, {}, seed);
    py::dict d;
    d["u"] = eis_tuple(s.u);
    d["v"] = eis_tuple(s.v);
    d["w"] = eis_tuple(s.w);
    d["k"] = s.k;
    d["distance"] = state_distance(s, bx, by, prec).to_double();
    return d;
  }, py::arg("x"), py::arg("y"), py::arg("eps"), py::arg("seed") = 0);

  m.def("synthesize", [](const Eigen::MatrixXcd& u, double eps, const std::string& flavor,
                         std::uint64_t seed, bool verify) {
    const int n = qutrits_for_dim(u.rows());
    if (n < 1 || u.rows() != u.cols()) throw InputError("matrix must be square with dimension 3^n");
    const long prec = approx_precision_bits(eps);
    SynthesisOptions opt;
    opt.verify = verify;
    SynthesisReport rep;
    {
      py::gil_scoped_release release;
      rep = synthesize(BigMatrix::from_eigen(u, prec), n, eps, parse_flavor(flavor), seed, opt);
    }
    py::module_ json = py::module_::import("json");
    py::dict out = json.attr("loads")(rep.to_json());
    out["circuit"] = circuit_to_text(rep.circuit);
    return out;
  }, py::arg("unitary"), py::arg("eps"), py::arg("flavor") = "auto", py::arg("seed") = 0,
     py::arg("verify") = true,
     "Report dict with the circuit in text form under 'circuit'. The input is double precision.");

  m.def("simulate", [](const std::string& text) {
    return simulate_double(circuit_from_text(text));
  }, py::arg("circuit"), "Unitary of a circuit given in text form.");

  m.def("r_count", [](const std::string& text) { return r_count(circuit_from_text(text)); },
        py::arg("circuit"));

  m.def("distance", [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return distance(a, b);
  }, py::arg("u"), py::arg("v"), "Spectral-norm distance minimized over global phase.");

  m.def("exact_synthesize_1q", [](const std::string& json_text) {
    ExactMatrix mat = exact_matrix_from_json(json_text);
    return circuit_to_text(exact_synthesize_1q(mat));
  }, py::arg("matrix_json"));

  m.def("axial_reflection", [](int n, long j) {
    return circuit_to_text(axial_reflection_circuit(n, j));
  }, py::arg("n"), py::arg("j"));

  m.def("rc", &rc, py::arg("n"));
  m.def("classical_group_order", [] { return classical_group_order(); });
}
