// Copyright 2026 The cavitygates Authors
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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>

#include <Eigen/Dense>

#include "cavitygates/errors.hpp"

namespace cavitygates {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Absolute tolerance for approximate comparisons.
struct Tolerance {
  double eps = 1e-9;

  constexpr Tolerance() = default;
  explicit Tolerance(double e);
};

/// Largest supported dimension (three qubits).
inline constexpr std::size_t kMaxDim = 8;

/**
 * Dense square complex matrix of dimension 1..8.
 *
 * Storage is an Eigen dynamic matrix; the class only adds the square and
 * size invariants plus the handful of operations the gate machinery needs.
 * Values are immutable through the public interface except by assignment.
 */
class ComplexMatrix {
 public:
  /// Throws DimensionMismatch unless `m` is square with 1 <= dim <= 8.
  explicit ComplexMatrix(Eigen::MatrixXcd m);

  /// Row-major construction; every row must have the same length as the list.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  const Eigen::MatrixXcd& eigen() const { return m_; }

  Complex trace() const { return m_.trace(); }
  Complex determinant() const { return m_.determinant(); }
  double frobenius_norm() const { return m_.norm(); }
  ComplexMatrix transpose() const { return ComplexMatrix(Eigen::MatrixXcd(m_.transpose())); }

  bool is_unitary(Tolerance tol = {}) const;
  bool is_hermitian(Tolerance tol = {}) const;

  /// Top-left `size`-square block starting at (row, col).
  ComplexMatrix block(std::size_t row, std::size_t col, std::size_t size) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

  /// Exact entrywise equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) { return a.m_ == b.m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Kronecker product; the left factor owns the most significant index bits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Commutator a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/**
 * exp(-i * scale * h) for Hermitian h, computed from the eigendecomposition
 * h = V diag(w) V^dagger so the result is unitary to machine precision.
 * Throws NotHermitian if `h` fails is_hermitian(tol).
 */
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale, Tolerance tol = {});

/// Eigenvalues of a Hermitian matrix in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h, Tolerance tol = {});

/**
 * min over theta of ||u - e^{i theta} v||_F.
 *
 * The minimizing phase is arg Tr(v^dagger u); the norm is evaluated at that
 * phase directly rather than through |u|^2 + |v|^2 - 2|Tr(v^dagger u)|, which
 * loses half the significant digits near zero.
 */
double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F <= tol.eps
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol = {});

/// phase_distance(a, b) <= tol.eps
bool approx_equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol = {});

/// Aligned "a+bi" columns with 6 significant digits, one row per line.
std::string to_text(const ComplexMatrix& m);

}  // namespace cavitygates
