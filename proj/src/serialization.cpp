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

#include "cavitygates/serialization.hpp"

#include <fmt/format.h>

namespace cavitygates {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(fmt::format("missing field '{}'", key));
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw ParseError(fmt::format("field '{}' must be a number", key));
  return v.get<double>();
}

std::string axis_name(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return "x";
    case PauliAxis::Y: return "y";
    case PauliAxis::Z: return "z";
    case PauliAxis::Plus: return "+";
    case PauliAxis::Minus: return "-";
  }
  return "?";
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return Json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

static ComplexMatrix parse_matrix(const Json& j) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer()) throw ParseError("field 'dim' must be an integer");
  const auto n = dim_j.get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxDim))
    throw ParseError(fmt::format("dimension {} outside 1..{}", n, kMaxDim));
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  auto check_rows = [n](const Json& a, const char* name) {
    if (!a.is_array() || static_cast<long long>(a.size()) != n)
      throw ParseError(fmt::format("'{}' must have {} rows", name, n));
    for (const auto& row : a) {
      if (!row.is_array() || static_cast<long long>(row.size()) != n)
        throw ParseError(fmt::format("every row of '{}' must have {} entries", name, n));
      for (const auto& v : row)
        if (!v.is_number()) throw ParseError(fmt::format("'{}' entries must be numbers", name));
    }
  };
  check_rows(re, "re");
  check_rows(im, "im");
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = Complex{re[r][c].get<double>(), im[r][c].get<double>()};
  return ComplexMatrix(std::move(m));
}

Json to_json(const LocalInvariants& inv) {
  return Json{{"g1", complex_json(inv.g1)}, {"g2", complex_json(inv.g2)}};
}

Json to_json(const CavityParams& p) {
  return Json{{"g", p.g}, {"delta", p.delta}, {"kappa", p.kappa}, {"nbar", p.nbar},
              {"n_atoms", p.n_atoms.value()}};
}

static CavityParams parse_params(const Json& j) {
  CavityParams p;
  p.g = number(j, "g");
  p.delta = number(j, "delta");
  p.kappa = number(j, "kappa");
  if (j.contains("nbar")) p.nbar = number(j, "nbar");
  if (j.contains("n_atoms")) {
    const Json& n = j.at("n_atoms");
    if (!n.is_number_integer()) throw ParseError("field 'n_atoms' must be an integer");
    p.n_atoms = AtomCount{n.get<int>()};
  }
  p.validate();
  return p;
}

Json to_json(const GateSequence& seq) {
  Json steps = Json::array();
  for (const auto& step : seq.steps) {
    if (const auto* e = std::get_if<CollectiveEvolution>(&step)) {
      steps.push_back(Json{{"kind", "evolve"},
                           {"phi_pi", e->phi_pi.to_string()},
                           {"form", to_string(e->form.kind)},
                           {"include_linear", e->form.include_linear}});
    } else if (const auto* l = std::get_if<LocalLayer>(&step)) {
      Json rots = Json::array();
      for (const auto& r : l->rotations)
        rots.push_back(Json{{"qubit", r.qubit}, {"axis", axis_name(r.axis)}, {"angle_pi", r.angle_pi}});
      steps.push_back(Json{{"kind", "local"}, {"rotations", std::move(rots)}});
    } else {
      steps.push_back(Json{{"kind", "phase"}, {"theta_pi", std::get<GlobalPhase>(step).theta_pi}});
    }
  }
  return Json{{"label", seq.label}, {"n_atoms", seq.n_atoms.value()}, {"steps", std::move(steps)}};
}

static GateSequence parse_sequence(const Json& j) {
  const Json& n = field(j, "n_atoms");
  if (!n.is_number_integer()) throw ParseError("field 'n_atoms' must be an integer");
  GateSequence seq{AtomCount{n.get<int>()}, {}, {}};
  if (j.contains("label")) seq.label = j.at("label").get<std::string>();
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw ParseError("field 'steps' must be an array");
  for (const auto& s : steps) {
    const auto kind = field(s, "kind").get<std::string>();
    if (kind == "evolve") {
      const Json& phi = field(s, "phi_pi");
      const Rational r = phi.is_number_integer() ? Rational(phi.get<std::int64_t>())
                                                 : Rational::parse(phi.get<std::string>());
      HamiltonianForm form{parse_form_kind(field(s, "form").get<std::string>()), true};
      if (s.contains("include_linear")) form.include_linear = s.at("include_linear").get<bool>();
      seq.steps.emplace_back(CollectiveEvolution{r, form});
    } else if (kind == "local") {
      LocalLayer layer;
      for (const auto& r : field(s, "rotations")) {
        const Json& q = field(r, "qubit");
        if (!q.is_number_integer()) throw ParseError("rotation 'qubit' must be an integer");
        layer.rotations.push_back(
            {q.get<int>(), parse_pauli_axis(field(r, "axis").get<std::string>()), number(r, "angle_pi")});
      }
      seq.steps.emplace_back(std::move(layer));
    } else if (kind == "phase") {
      seq.steps.emplace_back(GlobalPhase{number(s, "theta_pi")});
    } else {
      throw ParseError(fmt::format("unknown step kind '{}'", kind));
    }
  }
  seq.validate();
  return seq;
}

namespace {

template <typename F>
auto guarded(F&& parse) {
  try {
    return parse();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j) { return guarded([&] { return parse_matrix(j); }); }

CavityParams cavity_params_from_json(const Json& j) { return guarded([&] { return parse_params(j); }); }

GateSequence sequence_from_json(const Json& j) { return guarded([&] { return parse_sequence(j); }); }

}  // namespace cavitygates
