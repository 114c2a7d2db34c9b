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

#include "cavitygates/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cavitygates/gates.hpp"
#include "cavitygates/verification.hpp"

namespace cavitygates::cli {

namespace {

std::string pi_units(double radians) { return fmt::format("{:.12g}", radians / kPi); }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(fmt::format("'{}': {}", path, e.what()));
  }
}

ComplexMatrix named_or_file_gate(const std::string& name) {
  static const std::map<std::string, ComplexMatrix (*)()> registry{
      {"cnot", &gates::cnot},
      {"swap", &gates::swap},
      {"identity", [] { return ComplexMatrix::identity(4); }},
      {"toffoli", &gates::toffoli},
      {"u23", &gates::u23},
  };
  if (const auto it = registry.find(name); it != registry.end()) return it->second();
  return matrix_from_json(load_json_file(name));
}

struct TargetOptions {
  std::string target;
  int control = 2;
  int target_qubit = 3;
  bool simplified = false;
};

void add_target_options(CLI::App& cmd, TargetOptions& opts, bool allow_all) {
  std::vector<std::string> choices{"cnot2", "cnot3", "toffoli", "u23"};
  if (allow_all) choices.push_back("all");
  cmd.add_option("gate", opts.target, "Gate to build")->required()->check(CLI::IsMember(choices));
  cmd.add_option("--control", opts.control, "Control atom for cnot3 (1-3)");
  cmd.add_option("--target", opts.target_qubit, "Target atom for cnot3 (1-3)");
  cmd.add_flag("--simplified", opts.simplified, "Three-CNOT Toffoli variant");
}

GateSequence build_target(const TargetOptions& o) {
  if (o.target == "cnot2") return cnot2_sequence();
  if (o.target == "cnot3") return cnot3_sequence(o.control, o.target_qubit);
  if (o.target == "toffoli") return toffoli_sequence(o.simplified);
  return spin_echo_u23(1, 0);
}

int print_report(const Report& r, bool json, std::ostream& out) {
  if (json)
    out << to_json(r).dump(2) << '\n';
  else
    out << to_text(r);
  return r.status() == Status::Pass ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gate synthesis and verification for collective-spin cavity interactions",
               "cavitygates"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string gate_name;
  auto* invariants_cmd = app.add_subcommand("invariants", "Local invariants of a two-qubit gate");
  invariants_cmd->add_option("gate", gate_name, "Named gate (cnot, swap, identity, u23) or matrix JSON file")
      ->required();

  int atoms = 2;
  std::optional<double> phi;
  std::optional<double> phi_pi;
  double nbar = 0.0;
  std::string form_name = "ladder";
  bool no_compensate = false;
  bool no_linear = false;
  auto* evolve_cmd = app.add_subcommand("evolve", "Collective evolution unitary exp(-i phi H/hbar eta)");
  evolve_cmd->add_option("--atoms", atoms, "Number of atoms (1-3)")->required()->check(CLI::Range(1, 3));
  auto* phi_opt = evolve_cmd->add_option("--phi", phi, "Phase eta*t in radians");
  auto* phi_pi_opt = evolve_cmd->add_option("--phi-pi", phi_pi, "Phase eta*t in units of pi");
  phi_opt->excludes(phi_pi_opt);
  evolve_cmd->add_option("--nbar", nbar, "Mean thermal photon number")->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--form", form_name, "Hamiltonian form")->check(CLI::IsMember({"ladder", "casimir"}));
  evolve_cmd->add_flag("--no-compensate", no_compensate, "Skip the thermal R_z compensation");
  evolve_cmd->add_flag("--no-linear", no_linear, "Drop the linear S_z term from the Hamiltonian");

  TargetOptions synth_opts;
  auto* synth_cmd = app.add_subcommand("synthesize", "Print a gate sequence, its unitary and collective time");
  add_target_options(*synth_cmd, synth_opts, false);

  TargetOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks and print a report");
  add_target_options(*verify_cmd, verify_opts, true);

  CavityParams params;
  int n_atoms = 2;
  std::string params_file;
  auto* params_cmd = app.add_subcommand("params", "Coupling factor, validity ratio and physical gate times");
  auto* g_opt = params_cmd->add_option("--g", params.g, "Dipole coupling g (rad/s)");
  auto* d_opt = params_cmd->add_option("--delta", params.delta, "Detuning Delta (rad/s)");
  auto* k_opt = params_cmd->add_option("--kappa", params.kappa, "Cavity loss rate kappa (rad/s)");
  params_cmd->add_option("--nbar", params.nbar, "Mean thermal photon number");
  params_cmd->add_option("--n", n_atoms, "Number of atoms")->check(CLI::Range(1, 3));
  auto* file_opt = params_cmd->add_option("--file", params_file, "CavityParams JSON file");
  file_opt->excludes(g_opt)->excludes(d_opt)->excludes(k_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*invariants_cmd) {
      const auto inv = local_invariants(named_or_file_gate(gate_name));
      if (json) {
        out << to_json(inv).dump(2) << '\n';
      } else {
        // Adding 0.0 turns -0 into 0.
        out << fmt::format("g1 = {:.12g}{:+.12g}i\n", inv.g1.real() + 0.0, inv.g1.imag() + 0.0);
        out << fmt::format("g2 = {:.12g}{:+.12g}i\n", inv.g2.real() + 0.0, inv.g2.imag() + 0.0);
      }
      return kExitPass;
    }

    if (*evolve_cmd) {
      if (!phi && !phi_pi) throw CLI::RequiredError("--phi or --phi-pi");
      const double radians = phi ? *phi : kPi * *phi_pi;
      const HamiltonianForm form{parse_form_kind(form_name), !no_linear};
      const auto u = evolve(AtomCount{atoms}, EvolutionPhase{radians}, form, nbar, !no_compensate);
      if (json)
        out << Json{{"phi_pi", radians / kPi}, {"matrix", to_json(u)}}.dump(2) << '\n';
      else
        out << fmt::format("phi = {} pi\n", pi_units(radians)) << to_text(u);
      return kExitPass;
    }

    if (*synth_cmd) {
      const auto seq = build_target(synth_opts);
      const auto u = compose(seq);
      const Rational t = collective_time(seq);
      if (json) {
        out << Json{{"sequence", to_json(seq)},
                    {"matrix", to_json(u)},
                    {"collective_time_pi", t.to_string()}}
                   .dump(2)
            << '\n';
      } else {
        out << to_json(seq).dump(2) << '\n' << to_text(u);
        out << fmt::format("collective_time = {} pi/eta ({:.12g} pi/eta)\n", t.to_string(), t.to_double());
      }
      return kExitPass;
    }

    if (*verify_cmd) {
      const auto& o = verify_opts;
      if (o.target == "all") return print_report(verify_all(), json, out);
      if (o.target == "cnot2") return print_report(verify_cnot2(), json, out);
      if (o.target == "cnot3") return print_report(verify_cnot3(o.control, o.target_qubit), json, out);
      if (o.target == "toffoli") return print_report(verify_toffoli(o.simplified), json, out);
      return print_report(verify_spin_echo(), json, out);
    }

    if (params_file.empty()) {
      if (g_opt->count() == 0 || d_opt->count() == 0 || k_opt->count() == 0)
        throw CLI::RequiredError("--g, --delta and --kappa (or --file)");
      params.n_atoms = AtomCount{n_atoms};
      params.validate();
    } else {
      params = cavity_params_from_json(load_json_file(params_file));
    }
    const double eta = coupling_eta(params);
    const double ratio = validity_ratio(params);
    const bool warn = ratio >= kValidityWarningThreshold;
    if (warn)
      err << fmt::format("warning: g*sqrt(N)/|i*Delta + kappa| = {:.3g} is not small; the effective "
                         "Hamiltonian may be inaccurate\n", ratio);

    const std::vector<std::pair<std::string, Rational>> times{
        {"cnot2", collective_time(cnot2_sequence())},
        {"cnot3", collective_time(cnot3_sequence(2, 3))},
        {"toffoli", collective_time(toffoli_sequence(false))},
        {"toffoli-simplified", collective_time(toffoli_sequence(true))}};
    auto seconds = [eta](Rational t) {
      return eta == 0.0 ? std::numeric_limits<double>::infinity() : kPi * t.to_double() / std::abs(eta);
    };
    if (json) {
      Json gt = Json::object();
      for (const auto& [name, t] : times) {
        const double s = seconds(t);
        gt[name] = Json{{"pi_over_eta", t.to_string()}, {"seconds", std::isfinite(s) ? Json(s) : Json(nullptr)}};
      }
      out << Json{{"params", to_json(params)},
                  {"eta", eta},
                  {"validity_ratio", ratio},
                  {"validity_warning", warn},
                  {"gate_times", gt}}
                 .dump(2)
          << '\n';
    } else {
      out << fmt::format("eta            = {:.12g} rad/s\n", eta);
      out << fmt::format("validity_ratio = {:.12g}{}\n", ratio, warn ? "  (warning: not << 1)" : "");
      for (const auto& [name, t] : times)
        out << fmt::format("{:<19}= {} pi/eta = {:.12g} s\n", name, t.to_string(), seconds(t));
    }
    return kExitPass;
  } catch (const CLI::Error& e) {
    err << "error: missing " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cavitygates::cli
