// Copyright 2026 The bqsdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Density-matrix oracle for detection probabilities. Deliberately shares no
// code with the library: states, projectors and attacks are spelled out by
// hand so a bug in the state-vector path cannot hide here.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Matrix {
  std::size_t dim = 0;
  std::vector<C> m;  // row-major

  explicit Matrix(std::size_t d) : dim(d), m(d * d) {}
  C& operator()(std::size_t r, std::size_t c) { return m[r * dim + c]; }
  C operator()(std::size_t r, std::size_t c) const { return m[r * dim + c]; }
};

inline Matrix outer(const std::vector<C>& v) {
  Matrix r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.dim * b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l) r(i * b.dim + k, j * b.dim + l) = a(i, j) * b(k, l);
  return r;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix r(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t j = 0; j < a.dim; ++j) r(i, j) += a(i, k) * b(k, j);
  return r;
}

inline Matrix dagger(const Matrix& a) {
  Matrix r(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] += b.m[i];
  return r;
}

inline Matrix identity(std::size_t d) {
  Matrix r(d);
  for (std::size_t i = 0; i < d; ++i) r(i, i) = 1.0;
  return r;
}

inline double trace_real(const Matrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim; ++i) t += a(i, i).real();
  return t;
}

/// Traces out the last qubit of an n-qubit density matrix.
inline Matrix trace_last(const Matrix& a) {
  Matrix r(a.dim / 2);
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j) r(i, j) = a(2 * i, 2 * j) + a(2 * i + 1, 2 * j + 1);
  return r;
}

inline const double kS = 1.0 / std::sqrt(2.0);

// Single-qubit basis vectors: Z = {|0>, |1>}, X = {|+>, |->}.
inline std::vector<C> ket(bool x_basis, int outcome) {
  if (!x_basis) return outcome == 0 ? std::vector<C>{1, 0} : std::vector<C>{0, 1};
  return outcome == 0 ? std::vector<C>{kS, kS} : std::vector<C>{kS, -kS};
}

/// |Psi_0> = (|000> + |111>)/sqrt2 and |Psi_5> = (|010> - |101>)/sqrt2.
inline std::vector<C> ghz0() {
  std::vector<C> v(8);
  v[0] = kS;
  v[7] = kS;
  return v;
}

inline std::vector<C> ghz5() {
  std::vector<C> v(8);
  v[0b010] = kS;
  v[0b101] = -kS;
  return v;
}

/// Projector onto the 3-qubit product outcome (a, b, c) in one basis.
inline Matrix product_projector(bool x_basis, int a, int b, int c) {
  return kron(kron(outer(ket(x_basis, a)), outer(ket(x_basis, b))), outer(ket(x_basis, c)));
}

/// Probability that a Bob/Alice check in `x_basis` on rho yields an outcome
/// impossible for the ideal state psi.
inline double ghz_error(const Matrix& rho, const std::vector<C>& psi, bool x_basis) {
  const Matrix ideal = outer(psi);
  double err = 0.0;
  for (int o = 0; o < 8; ++o) {
    const Matrix p = product_projector(x_basis, (o >> 2) & 1, (o >> 1) & 1, o & 1);
    if (trace_real(mul(p, ideal)) < 1e-12) err += trace_real(mul(p, rho));
  }
  return err;
}

/// rho_AB (x) |f><f|, with rho_AB the reduced state of psi.
inline Matrix intercept_state(const std::vector<C>& psi, const std::vector<C>& fake) {
  return kron(trace_last(outer(psi)), outer(fake));
}

/// C measured in the given basis and forwarded: dephasing channel on C.
inline Matrix measure_resend_state(const std::vector<C>& psi, bool x_basis) {
  const Matrix rho = outer(psi);
  Matrix out(8);
  for (int o = 0; o < 2; ++o) {
    const Matrix k = kron(identity(4), outer(ket(x_basis, o)));
    out = add(out, mul(mul(k, rho), k));
  }
  return out;
}

/// Eve's coupling: ancilla |0>, rotate C by [[a, -b], [b, a]], then CNOT C->ancilla.
/// Returns the 3-qubit reduced state after discarding the ancilla.
inline Matrix entangle_state(const std::vector<C>& psi, double beta2) {
  const double b = std::sqrt(beta2);
  const double a = std::sqrt(1.0 - beta2);
  std::vector<C> v(16);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t ab = i >> 1;
    const int c = static_cast<int>(i & 1);
    // R|0> = a|0> + b|1>, R|1> = -b|0> + a|1>
    const C r0 = c == 0 ? C(a) : C(-b);
    const C r1 = c == 0 ? C(b) : C(a);
    // CNOT copies the rotated bit into the ancilla.
    v[((ab << 1) | 0) << 1 | 0] += psi[i] * r0;
    v[((ab << 1) | 1) << 1 | 1] += psi[i] * r1;
  }
  return trace_last(outer(v));
}

/// Single-decoy detection when Bob measures in the preparation basis.
inline double decoy_error(const Matrix& rho, bool x_basis, int prepared_outcome) {
  return trace_real(mul(outer(ket(x_basis, 1 - prepared_outcome)), rho));
}

}  // namespace oracle
