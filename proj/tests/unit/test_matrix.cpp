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

#include <cmath>
#include <random>

#include "cavitygates/collective_spin.hpp"
#include "cavitygates/matrix.hpp"
#include "cavitygates/random.hpp"
#include "support/reference.hpp"

namespace cavitygates {
namespace {

using testing::id2;
using testing::sx;
using testing::sy;
using testing::sz;

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(id2(), id2()), ComplexMatrix::identity(4));
}

TEST(Kron, LeftFactorIsMostSignificant) {
  // X on qubit 1 swaps |00> <-> |10> and |01> <-> |11>.
  const ComplexMatrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(kron(sx(), id2()), expected);
}

TEST(Kron, ZZ) {
  EXPECT_EQ(kron(sz(), sz()), ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0}));
}

TEST(Kron, AssociativeBitIdentical) {
  // Entries whose products are exact in binary floating point.
  const ComplexMatrix a{{0.5, kI}, {-2.0, Complex{0.25, -1.0}}};
  const ComplexMatrix d = ComplexMatrix::diagonal({Complex{1.0, 1.0}, -0.125});
  for (const auto& x : {sx(), sy(), sz(), a, d})
    for (const auto& y : {sy(), a, d})
      for (const auto& z : {sx(), d, a}) EXPECT_EQ(kron(kron(x, y), z), kron(x, kron(y, z)));
}

TEST(Kron, AssociativeOnRandomUnitaries) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_unitary(2, rng);
    const auto b = random_unitary(2, rng);
    const auto c = random_unitary(2, rng);
    EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-15);
  }
}

TEST(Kron, RejectsOversizedResult) {
  EXPECT_THROW(kron(ComplexMatrix::identity(4), ComplexMatrix::identity(4)), DimensionMismatch);
}

TEST(ComplexMatrix, RejectsNonSquareAndEmpty) {
  EXPECT_THROW(ComplexMatrix(Eigen::MatrixXcd(2, 3)), DimensionMismatch);
  EXPECT_THROW(ComplexMatrix(Eigen::MatrixXcd(0, 0)), DimensionMismatch);
  EXPECT_THROW(ComplexMatrix(Eigen::MatrixXcd(9, 9)), DimensionMismatch);
  EXPECT_THROW((ComplexMatrix{{1.0, 0.0}, {0.0}}), DimensionMismatch);
}

TEST(ComplexMatrix, Predicates) {
  EXPECT_TRUE(sx().is_unitary());
  EXPECT_TRUE(sx().is_hermitian());
  const ComplexMatrix upper{{0.0, 1.0}, {0.0, 0.0}};
  EXPECT_FALSE(upper.is_unitary());
  EXPECT_FALSE(upper.is_hermitian());
  EXPECT_TRUE(upper.is_hermitian(Tolerance{2.0}));
}

TEST(Tolerance, MustBePositive) {
  EXPECT_THROW(Tolerance{0.0}, InvalidArgument);
  EXPECT_THROW(Tolerance{-1.0}, InvalidArgument);
  EXPECT_DOUBLE_EQ(Tolerance{}.eps, 1e-9);
}

TEST(Dagger, Examples) {
  EXPECT_EQ(dagger(ComplexMatrix::identity(4)), ComplexMatrix::identity(4));
  EXPECT_EQ(dagger(ComplexMatrix::diagonal({kI, -kI})), ComplexMatrix::diagonal({-kI, kI}));
  std::mt19937_64 rng(3);
  const auto u = random_unitary(8, rng);
  EXPECT_TRUE(approx_equal(dagger(u) * u, ComplexMatrix::identity(8)));
  EXPECT_EQ(dagger(dagger(u)), u);
}

TEST(ExpmHermitian, ZeroGenerator) {
  EXPECT_TRUE(approx_equal(expm_hermitian(ComplexMatrix::zero(4), 3.7), ComplexMatrix::identity(4), Tolerance{1e-15}));
}

TEST(ExpmHermitian, DiagonalGenerator) {
  const auto u = expm_hermitian(sz(), kPi / 2.0);
  const auto expected = ComplexMatrix::diagonal({std::polar(1.0, -kPi / 2.0), std::polar(1.0, kPi / 2.0)});
  EXPECT_LT(max_abs_diff(u, expected), 1e-15);
}

TEST(ExpmHermitian, TwoAtomProjectorMatchesClosedForm) {
  const auto g = dicke_projector_g();
  for (double phi : {0.0, 0.3, kPi / 4.0, 2.0}) {
    EXPECT_LT(max_abs_diff(expm_hermitian(Complex{2.0} * g, phi), testing::two_atom_closed_form(phi)), 1e-13)
        << "phi = " << phi;
  }
}

TEST(ExpmHermitian, RejectsNonHermitian) {
  const ComplexMatrix upper{{0.0, 1.0}, {0.0, 0.0}};
  EXPECT_THROW(expm_hermitian(upper, 1.0), NotHermitian);
}

TEST(ExpmHermitian, MatchesPowerSeriesForRotations) {
  for (double angle : {0.1, 1.0, -2.5}) {
    EXPECT_LT(max_abs_diff(expm_hermitian(testing::sy(), angle / 2.0), testing::series_rotation(testing::sy(), angle)),
              1e-14);
  }
}

TEST(ExpmHermitian, PropertyGroupLawAndUnitarity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> scale(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::size_t{1} << (1 + trial % 3);
    const auto h = random_hermitian(n, rng);
    const double s1 = scale(rng);
    const double s2 = scale(rng);
    const auto u1 = expm_hermitian(h, s1);
    EXPECT_TRUE(u1.is_unitary());
    EXPECT_TRUE(approx_equal(u1 * expm_hermitian(h, s2), expm_hermitian(h, s1 + s2)));
  }
}

TEST(PhaseDistance, IdentityAndGlobalPhase) {
  std::mt19937_64 rng(5);
  const auto u = random_unitary(4, rng);
  EXPECT_LT(phase_distance(u, u), 1e-15);
  for (double alpha : {0.3, -1.2, kPi}) EXPECT_LT(phase_distance(u, std::polar(1.0, alpha) * u), 1e-14);
}

TEST(PhaseDistance, IdentityVersusXBruteForce) {
  // Oracle: sample theta on a 10^4 grid and minimize ||I - e^{i theta} X||_F directly.
  double best = 1e9;
  for (int k = 0; k < 10000; ++k) {
    const double theta = 2.0 * kPi * k / 10000.0;
    best = std::min(best, (id2() - std::polar(1.0, theta) * sx()).frobenius_norm());
  }
  EXPECT_NEAR(best, 2.0, 1e-12);
  EXPECT_NEAR(phase_distance(id2(), sx()), 2.0, 1e-15);
}

TEST(PhaseDistance, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_unitary(4, rng);
    const auto v = random_unitary(4, rng);
    double best = 1e9;
    for (int k = 0; k < 20000; ++k) {
      const double theta = 2.0 * kPi * k / 20000.0;
      best = std::min(best, (u - std::polar(1.0, theta) * v).frobenius_norm());
    }
    // Grid spacing 3e-4 rad bounds the oracle's own error.
    EXPECT_NEAR(phase_distance(u, v), best, 1e-6);
    EXPECT_LE(phase_distance(u, v), best + 1e-12);
  }
}

TEST(PhaseDistance, ExactForEqualUnitaries) {
  // No sqrt(eps) floor: equal matrices give (near) machine-precision zero.
  std::mt19937_64 rng(23);
  const auto u = random_unitary(8, rng);
  EXPECT_LT(phase_distance(u, std::polar(1.0, 0.7) * u), 1e-13);
}

TEST(PhaseDistance, PropertySymmetricAndTriangle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_unitary(4, rng);
    const auto b = random_unitary(4, rng);
    const auto c = random_unitary(4, rng);
    EXPECT_NEAR(phase_distance(a, b), phase_distance(b, a), 1e-9);
    EXPECT_LE(phase_distance(a, c), phase_distance(a, b) + phase_distance(b, c) + 1e-9);
  }
}

TEST(PhaseDistance, DimensionMismatch) {
  EXPECT_THROW(phase_distance(id2(), ComplexMatrix::identity(4)), DimensionMismatch);
}

TEST(ToText, AlignedSixDigits) {
  const ComplexMatrix m{{1.0, Complex{0.0, -0.5}}, {Complex{1.0 / 3.0, 2.0}, -0.0}};
  EXPECT_EQ(to_text(m),
            "       1+0i       0-0.5i\n"
            "0.333333+2i         0+0i\n");
}

}  // namespace
}  // namespace cavitygates
