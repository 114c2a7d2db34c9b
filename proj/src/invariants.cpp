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

#include "cavitygates/invariants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace cavitygates {

namespace {

using Mat4 = Eigen::Matrix4cd;
using RealMat4 = Eigen::Matrix4d;

void require_two_qubit_unitary(const ComplexMatrix& gate, Tolerance tol) {
  if (gate.dim() != 4)
    throw DimensionMismatch(fmt::format("two-qubit gate must be 4x4, got {}x{}", gate.dim(), gate.dim()));
  if (!gate.is_unitary(tol)) throw NotUnitary("two-qubit gate is not unitary");
}

const Mat4& magic() {
  static const Mat4 q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 m;
    m << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return Mat4(s * m);
  }();
  return q;
}

// M_B^T M_B for M_B = Q^dagger M Q.
Mat4 gram_in_magic_basis(const Mat4& gate) {
  const Mat4 mb = magic().adjoint() * gate * magic();
  return mb.transpose() * mb;
}

struct RealEigenbasis {
  RealMat4 vectors;           // columns
  Eigen::Vector4cd values;    // m = V diag(values) V^T
};

// Real orthogonal eigenbasis of a complex symmetric unitary matrix. Re(m) and
// Im(m) commute, so every real combination cos(t) Re(m) + sin(t) Im(m) is
// diagonalized by the common basis; t is chosen to keep distinct eigenvalues
// of m as far apart as possible after the projection.
RealEigenbasis real_eigenbasis(const Mat4& m_in) {
  const Mat4 m = 0.5 * (m_in + m_in.transpose());
  const Eigen::ComplexEigenSolver<Mat4> ces(m, /*computeEigenvectors=*/false);
  const Eigen::Vector4cd lambda = ces.eigenvalues();

  constexpr double kSame = 1e-7;
  constexpr int kGrid = 180;
  double best_gap = -1.0;
  double best_t = 0.0;
  for (int s = 0; s < kGrid; ++s) {
    const double t = kPi * s / kGrid;
    const Complex rot = std::exp(Complex{0.0, -t});
    double gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (std::abs(lambda(a) - lambda(b)) < kSame) continue;
        gap = std::min(gap, std::abs((rot * lambda(a)).real() - (rot * lambda(b)).real()));
      }
    if (gap > best_gap + 1e-12) {
      best_gap = gap;
      best_t = t;
    }
  }

  const Complex rot = std::exp(Complex{0.0, -best_t});
  const RealMat4 projected = (rot * m).real();
  const Eigen::SelfAdjointEigenSolver<RealMat4> solver(0.5 * (projected + projected.transpose()));
  RealEigenbasis out;
  out.vectors = solver.eigenvectors();
  const Mat4 diag = out.vectors.cast<Complex>().transpose() * m * out.vectors.cast<Complex>();
  out.values = diag.diagonal();
  return out;
}

struct Matching {
  std::array<int, 4> perm{};  // d_L[perm[k]] pairs with d_M[k]
  int sign = 1;
  double error = std::numeric_limits<double>::infinity();
};

Matching match_spectra(const Eigen::Vector4cd& dm, const Eigen::Vector4cd& dl) {
  Matching best;
  std::array<int, 4> p{0, 1, 2, 3};
  for (int sign : {1, -1}) {
    std::sort(p.begin(), p.end());
    do {
      double err = 0.0;
      for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(dm(k) - double(sign) * dl(p[k])));
      if (err < best.error) best = Matching{p, sign, err};
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return best;
}

}  // namespace

ComplexMatrix magic_basis() { return ComplexMatrix(Eigen::MatrixXcd(magic())); }

LocalInvariants local_invariants(const ComplexMatrix& gate, Tolerance tol) {
  require_two_qubit_unitary(gate, tol);
  const Mat4 g = gate.eigen();
  const Mat4 m = gram_in_magic_basis(g);
  const Complex det = g.determinant();
  const Complex tr = m.trace();
  const Complex tr_sq = (m * m).trace();
  return {tr * tr / (16.0 * det), (tr * tr - tr_sq) / (4.0 * det)};
}

bool are_equivalent(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  const auto ia = local_invariants(a, tol);
  const auto ib = local_invariants(b, tol);
  return std::abs(ia.g1 - ib.g1) <= tol.eps && std::abs(ia.g2 - ib.g2) <= tol.eps;
}

bool is_local(const ComplexMatrix& u, Tolerance tol) {
  if (u.dim() != 4) throw DimensionMismatch(fmt::format("is_local expects 4x4, got {}x{}", u.dim(), u.dim()));
  // u[(i1 i2),(j1 j2)] -> r[(i1 j1),(i2 j2)]; A x B becomes the rank-one vec(A) vec(B)^T.
  Mat4 r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
  const Eigen::JacobiSVD<Mat4> svd(r);
  const auto& sv = svd.singularValues();
  return sv(0) > tol.eps && sv(1) <= tol.eps * std::max(1.0, sv(0));
}

LocalCorrectionPair solve_local_corrections(const ComplexMatrix& m_gate, const ComplexMatrix& l_gate,
                                            Tolerance tol) {
  const auto im = local_invariants(m_gate, tol);
  const auto il = local_invariants(l_gate, tol);
  if (std::abs(im.g1 - il.g1) > tol.eps || std::abs(im.g2 - il.g2) > tol.eps)
    throw NotEquivalent(fmt::format("invariants differ: ({:.6g}{:+.6g}i, {:.6g}{:+.6g}i) vs "
                                    "({:.6g}{:+.6g}i, {:.6g}{:+.6g}i)",
                                    im.g1.real(), im.g1.imag(), im.g2.real(), im.g2.imag(),
                                    il.g1.real(), il.g1.imag(), il.g2.real(), il.g2.imag()));

  // Unit-determinant representatives; the removed scalars end up in the phase.
  const Mat4 m_unit = m_gate.eigen() / std::pow(m_gate.determinant(), 0.25);
  Mat4 l_unit = l_gate.eigen() / std::pow(l_gate.determinant(), 0.25);

  const Mat4& q = magic();
  const Mat4 mb = q.adjoint() * m_unit * q;
  auto em = real_eigenbasis(mb.transpose() * mb);
  Mat4 lb = q.adjoint() * l_unit * q;
  auto el = real_eigenbasis(lb.transpose() * lb);

  const Matching match = match_spectra(em.values, el.values);
  if (match.error > std::sqrt(tol.eps))
    throw NotEquivalent(fmt::format("spectra of m and l do not match (error {:.3e})", match.error));
  if (match.sign < 0) {
    // Another fourth root of det L: L -> iL keeps det = 1 and flips the sign of l.
    l_unit *= kI;
    lb *= kI;
  }

  RealMat4 vl;
  for (int k = 0; k < 4; ++k) vl.col(k) = el.vectors.col(match.perm[static_cast<std::size_t>(k)]);
  RealMat4 ob = em.vectors * vl.transpose();
  if (ob.determinant() < 0.0) {
    vl.col(0) = -vl.col(0);
    ob = em.vectors * vl.transpose();
  }
  // O'_B = L_B O_B^T M_B^dagger is unitary and complex orthogonal, hence real.
  const Mat4 ob_prime = lb * ob.cast<Complex>().transpose() * mb.adjoint();
  const RealMat4 ob_prime_real = ob_prime.real();

  const Mat4 o = q * ob.cast<Complex>() * q.adjoint();
  const Mat4 o_prime = q * ob_prime_real.cast<Complex>() * q.adjoint();

  const Mat4 rebuilt = o_prime * m_gate.eigen() * o;
  const Complex overlap = (rebuilt.adjoint() * l_gate.eigen()).trace();
  const Complex phase = overlap / std::abs(overlap);

  return {ComplexMatrix(Eigen::MatrixXcd(o)), ComplexMatrix(Eigen::MatrixXcd(o_prime)), phase};
}

}  // namespace cavitygates
