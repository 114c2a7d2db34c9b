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

#include "cavitygates/collective_spin.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace cavitygates {

AtomCount::AtomCount(int n) : n_(n) {
  if (n < 1 || n > 3) throw IndexOutOfRange(fmt::format("atom count {} outside 1..3", n));
}

PauliAxis parse_pauli_axis(const std::string& s) {
  if (s == "x") return PauliAxis::X;
  if (s == "y") return PauliAxis::Y;
  if (s == "z") return PauliAxis::Z;
  if (s == "+") return PauliAxis::Plus;
  if (s == "-") return PauliAxis::Minus;
  throw ParseError(fmt::format("unknown Pauli axis '{}'", s));
}

HalfInt HalfInt::from_double(double v) {
  const double t = 2.0 * v;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-12) throw InvalidQuantumNumbers(fmt::format("{} is not a half-integer", v));
  return HalfInt{static_cast<int>(r)};
}

SpinQuantum::SpinQuantum(HalfInt j_, HalfInt m_) : j(j_), m(m_) {
  if (j.twice < 0 || std::abs(m.twice) > j.twice || (j.twice - m.twice) % 2 != 0)
    throw InvalidQuantumNumbers(fmt::format("invalid |j,m> = |{},{}>", j.value(), m.value()));
}

namespace {

ComplexMatrix single_qubit(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case PauliAxis::Y: return ComplexMatrix{{0.0, -kI}, {kI, 0.0}};
    case PauliAxis::Z: return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    case PauliAxis::Plus: return ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}};
    case PauliAxis::Minus: return ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}};
  }
  throw ParseError("unreachable Pauli axis");
}

}  // namespace

ComplexMatrix pauli(PauliAxis axis, int k, AtomCount n) {
  if (k < 1 || k > n.value())
    throw IndexOutOfRange(fmt::format("qubit index {} outside 1..{}", k, n.value()));
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out = k == 1 ? single_qubit(axis) : id;
  for (int q = 2; q <= n.value(); ++q) out = kron(out, q == k ? single_qubit(axis) : id);
  return out;
}

ComplexMatrix collective_op(PauliAxis axis, AtomCount n) {
  ComplexMatrix sum = ComplexMatrix::zero(n.hilbert_dim());
  for (int k = 1; k <= n.value(); ++k) sum = sum + pauli(axis, k, n);
  const bool ladder = axis == PauliAxis::Plus || axis == PauliAxis::Minus;
  return ladder ? sum : Complex{0.5} * sum;
}

ComplexMatrix s_squared(AtomCount n) {
  const auto sx = collective_op(PauliAxis::X, n);
  const auto sy = collective_op(PauliAxis::Y, n);
  const auto sz = collective_op(PauliAxis::Z, n);
  return sx * sx + sy * sy + sz * sz;
}

ComplexMatrix dicke_projector_g() {
  const AtomCount two{2};
  const auto sz = collective_op(PauliAxis::Z, two);
  return Complex{0.5} * (s_squared(two) - (sz * sz - sz));
}

namespace {

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 32> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size()))
    throw InvalidQuantumNumbers(fmt::format("factorial argument {} out of range", n));
  return table[static_cast<std::size_t>(n)];
}

// (a + b + ...) / 2 for twice-valued half-integers; must be integral.
int half_sum(int twice_sum) {
  if (twice_sum % 2 != 0)
    throw InvalidQuantumNumbers("angular momentum labels do not combine to an integer");
  return twice_sum / 2;
}

}  // namespace

double cg_coefficient(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  // Constructors validate |m| <= j and parity.
  SpinQuantum{j1, m1};
  SpinQuantum{j2, m2};
  SpinQuantum{J, M};
  if (J.twice < std::abs(j1.twice - j2.twice) || J.twice > j1.twice + j2.twice)
    throw InvalidQuantumNumbers(fmt::format("J = {} violates the triangle rule for j1 = {}, j2 = {}",
                                            J.value(), j1.value(), j2.value()));
  if (M.twice != m1.twice + m2.twice) return 0.0;

  const int a = half_sum(j1.twice + j2.twice - J.twice);  // j1 + j2 - J
  const int b = half_sum(j1.twice - m1.twice);            // j1 - m1
  const int c = half_sum(j2.twice + m2.twice);            // j2 + m2
  const int d = half_sum(J.twice - j2.twice + m1.twice);  // J - j2 + m1
  const int e = half_sum(J.twice - j1.twice - m2.twice);  // J - j1 - m2

  const double prefactor = std::sqrt(
      (J.twice + 1) * factorial(half_sum(J.twice + j1.twice - j2.twice)) *
      factorial(half_sum(J.twice - j1.twice + j2.twice)) * factorial(a) /
      factorial(half_sum(j1.twice + j2.twice + J.twice) + 1) *
      factorial(half_sum(J.twice + M.twice)) * factorial(half_sum(J.twice - M.twice)) *
      factorial(b) * factorial(half_sum(j1.twice + m1.twice)) *
      factorial(half_sum(j2.twice - m2.twice)) * factorial(c));

  double sum = 0.0;
  for (int k = std::max({0, -d, -e}); k <= std::min({a, b, c}); ++k) {
    const double term = 1.0 / (factorial(k) * factorial(a - k) * factorial(b - k) *
                               factorial(c - k) * factorial(d + k) * factorial(e + k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return prefactor * sum;
}

ComplexMatrix coupled_basis_transform_3() {
  const HalfInt half = HalfInt::from_twice(1);
  // Computational index bit for a spin-1/2 projection: m=+1/2 is |0>.
  auto bit = [](int twice_m) { return twice_m > 0 ? 0 : 1; };

  struct Label {
    int twice_m1;
    int j23;
    int m23;
  };
  const std::array<Label, 8> order{{{1, 1, 1}, {1, 1, 0}, {1, 1, -1},
                                    {-1, 1, 1}, {-1, 1, 0}, {-1, 1, -1},
                                    {1, 0, 0}, {-1, 0, 0}}};

  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(8, 8);
  for (std::size_t row = 0; row < order.size(); ++row) {
    const Label& l = order[row];
    for (int tm2 : {1, -1}) {
      for (int tm3 : {1, -1}) {
        const double amp = cg_coefficient(half, HalfInt::from_twice(tm2), half,
                                          HalfInt::from_twice(tm3), HalfInt::from_twice(2 * l.j23),
                                          HalfInt::from_twice(2 * l.m23));
        if (amp == 0.0) continue;
        const int col = (bit(l.twice_m1) << 2) | (bit(tm2) << 1) | bit(tm3);
        t(static_cast<Eigen::Index>(row), col) = amp;
      }
    }
  }
  return ComplexMatrix(std::move(t));
}

}  // namespace cavitygates
