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

#include <random>

#include "cavitygates/random.hpp"
#include "cavitygates/serialization.hpp"

namespace cavitygates {
namespace {

TEST(MatrixJson, Schema) {
  const ComplexMatrix m{{1.0, kI}, {Complex{0.5, -2.0}, 0.0}};
  const Json j = to_json(m);
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("re"), Json::parse("[[1.0, 0.0], [0.5, 0.0]]"));
  EXPECT_EQ(j.at("im"), Json::parse("[[0.0, 1.0], [-2.0, 0.0]]"));
}

TEST(MatrixJson, RoundTripIsExact) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {1u, 2u, 4u, 8u}) {
    const auto u = random_unitary(n, rng);
    EXPECT_EQ(matrix_from_json(Json::parse(to_json(u).dump())), u);
  }
}

TEST(MatrixJson, Errors) {
  EXPECT_THROW(matrix_from_json(Json::parse("{}")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 9, "re": [], "im": []})")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 2, "re": [[1,0],[0,1]], "im": [[0,0]]})")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 1, "re": [["a"]], "im": [[0]]})")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 1.5, "re": [[1]], "im": [[0]]})")), ParseError);
}

TEST(InvariantsJson, Schema) {
  const Json j = to_json(LocalInvariants{Complex{0.25, 0.0}, Complex{1.5, -0.0}});
  EXPECT_DOUBLE_EQ(j.at("g1").at("re").get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(j.at("g2").at("re").get<double>(), 1.5);
  EXPECT_DOUBLE_EQ(j.at("g2").at("im").get<double>(), 0.0);
}

TEST(ParamsJson, RoundTripAndDefaults) {
  const auto p = cavity_params_from_json(Json::parse(R"({"g": 2, "delta": 3, "kappa": 4})"));
  EXPECT_DOUBLE_EQ(p.g, 2.0);
  EXPECT_DOUBLE_EQ(p.nbar, 0.0);
  EXPECT_EQ(p.n_atoms.value(), 2);
  CavityParams q;
  q.g = 1e5;
  q.delta = 2e7;
  q.kappa = 3e3;
  q.nbar = 0.4;
  q.n_atoms = AtomCount{3};
  const auto back = cavity_params_from_json(to_json(q));
  EXPECT_EQ(back.g, q.g);
  EXPECT_EQ(back.kappa, q.kappa);
  EXPECT_EQ(back.nbar, q.nbar);
  EXPECT_EQ(back.n_atoms, q.n_atoms);
}

TEST(ParamsJson, Errors) {
  EXPECT_THROW(cavity_params_from_json(Json::parse(R"({"g": 2, "delta": 3})")), ParseError);
  EXPECT_THROW(cavity_params_from_json(Json::parse(R"({"g": "x", "delta": 3, "kappa": 1})")), ParseError);
  EXPECT_THROW(cavity_params_from_json(Json::parse(R"({"g": -1, "delta": 3, "kappa": 1})")), InvalidArgument);
  EXPECT_THROW(cavity_params_from_json(Json::parse(R"({"g": 1, "delta": 3, "kappa": 1, "n_atoms": 5})")),
               IndexOutOfRange);
}

TEST(SequenceJson, NamedSequencesRoundTrip) {
  for (const auto& seq : {cnot2_sequence(), cnot3_sequence(3, 1), spin_echo_u23(-1, 2), toffoli_sequence(false),
                          toffoli_sequence(true)}) {
    const auto back = sequence_from_json(Json::parse(to_json(seq).dump()));
    EXPECT_EQ(back, seq) << seq.label;
    EXPECT_EQ(compose(back), compose(seq));
  }
}

TEST(SequenceJson, RandomSequencesRoundTrip) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> small(-12, 12);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    GateSequence seq{AtomCount{n}, {}, "random"};
    for (int s = 0; s < 6; ++s) {
      switch (pick(rng)) {
        case 0:
          seq.steps.emplace_back(CollectiveEvolution{Rational(small(rng), 1 + std::abs(small(rng))),
                                                     {trial % 2 ? FormKind::Ladder : FormKind::Casimir, s % 2 == 0}});
          break;
        case 1:
          seq.steps.emplace_back(LocalLayer{{{1 + s % n, static_cast<PauliAxis>(s % 3), angle(rng)}}});
          break;
        default:
          seq.steps.emplace_back(GlobalPhase{angle(rng)});
      }
    }
    EXPECT_EQ(sequence_from_json(Json::parse(to_json(seq).dump())), seq);
  }
}

TEST(SequenceJson, Schema) {
  const Json j = to_json(spin_echo_u23(1, 0));
  EXPECT_EQ(j.at("n_atoms"), 3);
  EXPECT_EQ(j.at("steps").at(0).at("kind"), "evolve");
  EXPECT_EQ(j.at("steps").at(0).at("phi_pi"), "2/3");
  EXPECT_EQ(j.at("steps").at(0).at("form"), "casimir");
  EXPECT_EQ(j.at("steps").at(1).at("rotations").at(0).at("axis"), "x");
}

TEST(SequenceJson, Errors) {
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"steps": []})")), ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"n_atoms": 2, "steps": [{"kind": "warp"}]})")), ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(
                   R"({"n_atoms": 2, "steps": [{"kind": "evolve", "phi_pi": "1/0", "form": "ladder"}]})")),
               ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(
                   R"({"n_atoms": 2, "steps": [{"kind": "evolve", "phi_pi": "1/2", "form": "dicke"}]})")),
               ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(
                   R"({"n_atoms": 2, "steps": [{"kind": "local", "rotations": [{"qubit": 3, "axis": "x", "angle_pi": 1}]}]})")),
               InvalidQubits);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"n_atoms": 2, "steps": [{"kind": 7}]})")), ParseError);
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("8/3"), Rational(8, 3));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("16"), Rational(16));
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(16).to_string(), "16");
  EXPECT_EQ(Rational(1, 4) + Rational(1, 4), Rational(1, 2));
  EXPECT_THROW(Rational::parse("one"), ParseError);
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

}  // namespace
}  // namespace cavitygates
