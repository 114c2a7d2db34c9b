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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cavitygates/collective_spin.hpp"
#include "support/reference.hpp"

namespace cavitygates {
namespace {

const AtomCount kOne{1};
const AtomCount kTwo{2};
const AtomCount kThree{3};

std::vector<double> sorted_eigenvalues(const ComplexMatrix& h) {
  const Eigen::VectorXd w = hermitian_eigenvalues(h);
  std::vector<double> out(w.data(), w.data() + w.size());
  std::sort(out.begin(), out.end());
  return out;
}

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

TEST(AtomCount, Range) {
  EXPECT_THROW(AtomCount{0}, IndexOutOfRange);
  EXPECT_THROW(AtomCount{4}, IndexOutOfRange);
  EXPECT_EQ(AtomCount{3}.hilbert_dim(), 8u);
}

TEST(Pauli, Examples) {
  EXPECT_EQ(pauli(PauliAxis::Z, 1, kOne), ComplexMatrix::diagonal({1.0, -1.0}));
  EXPECT_EQ(pauli(PauliAxis::Z, 2, kTwo), ComplexMatrix::diagonal({1.0, -1.0, 1.0, -1.0}));
  EXPECT_EQ(pauli(PauliAxis::Plus, 1, kOne) * pauli(PauliAxis::Minus, 1, kOne), ComplexMatrix::diagonal({1.0, 0.0}));
}

TEST(Pauli, LadderIsCombinationOfXY) {
  for (int k = 1; k <= 3; ++k) {
    const auto plus = Complex{0.5} * (pauli(PauliAxis::X, k, kThree) + kI * pauli(PauliAxis::Y, k, kThree));
    EXPECT_EQ(pauli(PauliAxis::Plus, k, kThree), plus);
  }
}

TEST(Pauli, IndexOutOfRange) {
  EXPECT_THROW(pauli(PauliAxis::X, 0, kTwo), IndexOutOfRange);
  EXPECT_THROW(pauli(PauliAxis::X, 3, kTwo), IndexOutOfRange);
}

TEST(CollectiveOp, SzExamples) {
  EXPECT_EQ(collective_op(PauliAxis::Z, kOne), ComplexMatrix::diagonal({0.5, -0.5}));
  // Direct summation of the embedded sigma_z/2 terms.
  const auto direct = Complex{0.5} * (kron(testing::sz(), testing::id2()) + kron(testing::id2(), testing::sz()));
  EXPECT_EQ(direct, ComplexMatrix::diagonal({1.0, 0.0, 0.0, -1.0}));
  EXPECT_EQ(collective_op(PauliAxis::Z, kTwo), direct);
}

TEST(CollectiveOp, AngularMomentumAlgebra) {
  for (int n = 1; n <= 3; ++n) {
    const AtomCount atoms{n};
    const auto sx = collective_op(PauliAxis::X, atoms);
    const auto sy = collective_op(PauliAxis::Y, atoms);
    const auto sz = collective_op(PauliAxis::Z, atoms);
    EXPECT_TRUE(approx_equal(commutator(sx, sy), kI * sz, Tolerance{1e-12})) << "n = " << n;
    EXPECT_TRUE(approx_equal(commutator(sy, sz), kI * sx, Tolerance{1e-12}));
    const auto s2 = s_squared(atoms);
    for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z, PauliAxis::Plus, PauliAxis::Minus})
      EXPECT_LT(commutator(collective_op(axis, atoms), s2).frobenius_norm(), 1e-9);
  }
}

TEST(CollectiveOp, LadderCasimirIdentity) {
  for (int n = 1; n <= 3; ++n) {
    const AtomCount atoms{n};
    const auto sz = collective_op(PauliAxis::Z, atoms);
    const auto lhs = collective_op(PauliAxis::Plus, atoms) * collective_op(PauliAxis::Minus, atoms);
    EXPECT_LT((lhs - (s_squared(atoms) - sz * sz + sz)).frobenius_norm(), 1e-12) << "n = " << n;
  }
}

TEST(SSquared, Spectra) {
  EXPECT_TRUE(approx_equal(s_squared(kOne), Complex{0.75} * ComplexMatrix::identity(2), Tolerance{1e-15}));

  const auto two = sorted_eigenvalues(s_squared(kTwo));
  const std::vector<double> two_expected{0.0, 2.0, 2.0, 2.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(two[i], two_expected[i], 1e-12);

  const auto three = sorted_eigenvalues(s_squared(kThree));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(three[i], 0.75, 1e-12);
  for (std::size_t i = 4; i < 8; ++i) EXPECT_NEAR(three[i], 3.75, 1e-12);
}

TEST(DickeProjector, IdempotentHermitianRankTwo) {
  const auto g = dicke_projector_g();
  EXPECT_TRUE(approx_equal(g * g, g, Tolerance{1e-14}));
  EXPECT_TRUE(g.is_hermitian(Tolerance{1e-15}));
  const auto w = sorted_eigenvalues(g);
  EXPECT_NEAR(w[0], 0.0, 1e-14);
  EXPECT_NEAR(w[1], 0.0, 1e-14);
  EXPECT_NEAR(w[2], 1.0, 1e-14);
  EXPECT_NEAR(w[3], 1.0, 1e-14);
  // Projects onto |00> and the symmetric Sz = 0 state.
  EXPECT_NEAR(g(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(g(3, 3).real(), 0.0, 1e-15);
  EXPECT_NEAR(g(1, 2).real(), 0.5, 1e-15);
}

TEST(DickeProjector, EvolutionAtQuarterPi) {
  EXPECT_LT(max_abs_diff(expm_hermitian(Complex{2.0} * dicke_projector_g(), kPi / 4.0),
                         testing::two_atom_closed_form(kPi / 4.0)),
            1e-14);
}

TEST(ClebschGordan, TextbookValues) {
  EXPECT_NEAR(cg_coefficient(h(1), h(1), h(1), h(1), h(2), h(2)), 1.0, 1e-15);
  EXPECT_NEAR(cg_coefficient(h(1), h(1), h(1), h(-1), h(0), h(0)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cg_coefficient(h(1), h(-1), h(1), h(1), h(0), h(0)), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cg_coefficient(h(1), h(1), h(2), h(0), h(3), h(1)), std::sqrt(2.0 / 3.0), 1e-15);
  EXPECT_EQ(cg_coefficient(h(1), h(1), h(1), h(1), h(2), h(0)), 0.0);
}

TEST(ClebschGordan, LoweringOperatorOracle) {
  // |3/2,1/2> = J_-|1/2,1/2>|1,1> / sqrt(3), with J_- = j1_- + j2_-:
  // j1_-|1/2,1/2> = |1/2,-1/2>, j2_-|1,1> = sqrt(2)|1,0>.
  const double amp_flip_half = 1.0 / std::sqrt(3.0);
  const double amp_flip_one = std::sqrt(2.0) / std::sqrt(3.0);
  EXPECT_NEAR(cg_coefficient(h(1), h(-1), h(2), h(2), h(3), h(1)), amp_flip_half, 1e-15);
  EXPECT_NEAR(cg_coefficient(h(1), h(1), h(2), h(0), h(3), h(1)), amp_flip_one, 1e-15);
}

TEST(ClebschGordan, CompletenessOverJ) {
  // For fixed (j1, m1, j2, m2) the squared coefficients over allowed J sum to 1.
  for (int tj1 = 0; tj1 <= 3; ++tj1) {
    for (int tj2 = 0; tj2 <= 3; ++tj2) {
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
          double total = 0.0;
          for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
            if (std::abs(tm1 + tm2) > tJ) continue;
            const double c = cg_coefficient(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tm1 + tm2));
            total += c * c;
          }
          EXPECT_NEAR(total, 1.0, 1e-12) << tj1 << " " << tm1 << " " << tj2 << " " << tm2;
        }
      }
    }
  }
}

TEST(ClebschGordan, InvalidQuantumNumbers) {
  EXPECT_THROW(cg_coefficient(h(1), h(3), h(1), h(1), h(2), h(2)), InvalidQuantumNumbers);
  EXPECT_THROW(cg_coefficient(h(1), h(1), h(1), h(1), h(6), h(2)), InvalidQuantumNumbers);
  EXPECT_THROW(cg_coefficient(h(1), h(0), h(1), h(1), h(2), h(2)), InvalidQuantumNumbers);
  EXPECT_THROW(HalfInt::from_double(0.3), InvalidQuantumNumbers);
}

TEST(CoupledBasis, StretchedStateAndUnitarity) {
  const auto t = coupled_basis_transform_3();
  EXPECT_TRUE(t.is_unitary(Tolerance{1e-14}));
  for (std::size_t r = 0; r < 8; ++r) EXPECT_NEAR(t.eigen().row(static_cast<Eigen::Index>(r)).norm(), 1.0, 1e-15);
  // |000> -> |m1 = 1/2> x |j23 = 1, M = 1>, the first coupled state.
  EXPECT_NEAR(t(0, 0).real(), 1.0, 1e-15);
  for (std::size_t r = 1; r < 8; ++r) EXPECT_EQ(t(r, 0), Complex{});
}

TEST(CoupledBasis, SeparatesTripletAndSinglet) {
  const auto t = coupled_basis_transform_3();
  const auto s2 = t * s_squared(kThree) * dagger(t);
  EXPECT_LT(s2.eigen().block(0, 6, 6, 2).norm(), 1e-14);
  EXPECT_LT(s2.eigen().block(6, 0, 2, 6).norm(), 1e-14);
  // The pair (2,3) spin is diagonal with j23(j23+1) in the coupled basis.
  const AtomCount three{3};
  auto pair_op = [&](PauliAxis a) { return Complex{0.5} * (pauli(a, 2, three) + pauli(a, 3, three)); };
  const auto px = pair_op(PauliAxis::X);
  const auto py = pair_op(PauliAxis::Y);
  const auto pz = pair_op(PauliAxis::Z);
  const auto pair_s2 = t * (px * px + py * py + pz * pz) * dagger(t);
  const auto expected = ComplexMatrix::diagonal({2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 0.0, 0.0});
  EXPECT_TRUE(approx_equal(pair_s2, expected, Tolerance{1e-13}));
}

}  // namespace
}  // namespace cavitygates
