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

#include "cavitygates/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace cavitygates {

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e > 0.0)) throw InvalidArgument(fmt::format("tolerance must be positive, got {}", e));
}

namespace {

void check_dim(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols)
    throw DimensionMismatch(fmt::format("matrix must be square, got {}x{}", rows, cols));
  if (rows < 1 || rows > static_cast<Eigen::Index>(kMaxDim))
    throw DimensionMismatch(fmt::format("matrix dimension {} outside 1..{}", rows, kMaxDim));
}

void check_same(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(fmt::format("{}: dimensions {} and {} differ", what, a.dim(), b.dim()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  check_dim(m_.rows(), m_.cols());
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  m_.resize(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    check_dim(n, static_cast<Eigen::Index>(row.size()));
    Eigen::Index c = 0;
    for (const auto& v : row) m_(r, c++) = v;
    ++r;
  }
  check_dim(m_.rows(), m_.cols());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& v : entries) d(i++) = v;
  return ComplexMatrix(Eigen::MatrixXcd(d.asDiagonal()));
}

bool ComplexMatrix::is_unitary(Tolerance tol) const {
  const auto n = m_.rows();
  return (m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(n, n)).norm() < tol.eps;
}

bool ComplexMatrix::is_hermitian(Tolerance tol) const {
  return (m_ - m_.adjoint()).norm() < tol.eps;
}

ComplexMatrix ComplexMatrix::block(std::size_t row, std::size_t col, std::size_t size) const {
  if (row + size > dim() || col + size > dim())
    throw IndexOutOfRange(fmt::format("block ({},{}) of size {} exceeds dimension {}", row, col,
                                      size, dim()));
  const auto s = static_cast<Eigen::Index>(size);
  return ComplexMatrix(Eigen::MatrixXcd(
      m_.block(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), s, s)));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same(a, b, "product");
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ * b.m_));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same(a, b, "sum");
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same(a, b, "difference");
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ - b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix(Eigen::MatrixXcd(s * a.m_));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto na = static_cast<Eigen::Index>(a.dim());
  const auto nb = static_cast<Eigen::Index>(b.dim());
  Eigen::MatrixXcd out(na * nb, nb * na);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j) out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
  return ComplexMatrix(std::move(out));
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  return ComplexMatrix(Eigen::MatrixXcd(a.eigen().adjoint()));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitian_solver(const ComplexMatrix& h,
                                                                 Tolerance tol) {
  if (!h.is_hermitian(tol))
    throw NotHermitian(fmt::format("matrix is not Hermitian (||H - H^dagger|| = {:.3e})",
                                   (h.eigen() - h.eigen().adjoint()).norm()));
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Eigen::MatrixXcd sym = 0.5 * (h.eigen() + h.eigen().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw NotHermitian("Hermitian eigendecomposition failed");
  return solver;
}

}  // namespace

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale, Tolerance tol) {
  const auto solver = hermitian_solver(h, tol);
  const Eigen::VectorXd& w = solver.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(Complex{0.0, -scale * w(k)});
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return ComplexMatrix(Eigen::MatrixXcd(v * phases.asDiagonal() * v.adjoint()));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h, Tolerance tol) {
  return hermitian_solver(h, tol).eigenvalues();
}

double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  check_same(u, v, "phase_distance");
  const Complex overlap = (v.eigen().adjoint() * u.eigen()).trace();
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex{1.0, 0.0};
  return (u.eigen() - phase * v.eigen()).norm();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same(a, b, "max_abs_diff");
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  check_same(a, b, "approx_equal");
  return (a.eigen() - b.eigen()).norm() <= tol.eps;
}

bool approx_equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  return phase_distance(a, b) <= tol.eps;
}

namespace {

// Six significant digits; "-0" collapses to "0".
std::string fmt_part(double x) {
  if (x == 0.0) x = 0.0;
  std::string s = fmt::format("{:.6g}", x);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string to_text(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::string> cells;
  cells.reserve(n * n);
  std::size_t width = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = m(r, c);
      std::string im = fmt_part(z.imag());
      std::string cell = fmt_part(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
      width = std::max(width, cell.size());
      cells.push_back(std::move(cell));
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c != 0) out << "  ";
      out << fmt::format("{:>{}}", cells[r * n + c], width);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cavitygates
