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

#include "metaplectic/distance.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "metaplectic/error.hpp"

namespace metaplectic {

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

namespace {

constexpr int kScanPoints = 72;
constexpr int kGoldenSteps = 90;

// Minimizes f over delta in [-pi, pi): coarse scan then golden section.
template <class F>
double minimize_phase(F&& f) {
  const double pi = std::numbers::pi;
  double best = f(0.0), best_x = 0.0;
  const double h = 2 * pi / kScanPoints;
  for (int i = 1; i < kScanPoints; ++i) {
    double x = -pi + h * i;
    double v = f(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = best_x - h, b = best_x + h;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < kGoldenSteps; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::min({best, fc, fd});
}

}  // namespace

double distance(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V) {
  if (U.rows() != V.rows() || U.cols() != V.cols())
    throw InputError("distance: dimension mismatch");
  std::complex<double> tr = (V.adjoint() * U).trace();
  double phi0 = std::abs(tr) > 1e-12 ? std::arg(tr) : 0.0;
  return minimize_phase([&](double delta) {
    return spectral_norm(U - std::polar(1.0, phi0 + delta) * V);
  });
}

double distance(const BigMatrix& U, const BigMatrix& V) {
  if (U.rows != V.rows || U.cols != V.cols) throw InputError("distance: dimension mismatch");
  long prec = U.data.empty() ? default_precision() : U.data[0].precision();
  ScopedPrecision sp(prec);
  BigComplex tr = BigComplex::zero(prec);
  for (std::size_t i = 0; i < U.data.size(); ++i) tr += conj(V.data[i]) * U.data[i];
  BigComplex base(std::complex<double>(1.0, 0.0), prec);
  if (abs(tr).to_double() > 1e-12) base = tr / abs(tr);
  return minimize_phase([&](double delta) {
    BigComplex ph = base * BigComplex::polar(BigFloat(delta, prec));
    Eigen::MatrixXcd d(U.rows, U.cols);
    for (long c = 0; c < U.cols; ++c)
      for (long r = 0; r < U.rows; ++r) d(r, c) = (U(r, c) - ph * V(r, c)).to_complex();
    return spectral_norm(d);
  });
}

double vector_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) throw InputError("vector_distance: dimension mismatch");
  return (a - b).norm();
}

}  // namespace metaplectic
