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

#include <optional>
#include <string>
#include <vector>

#include "cavitygates/serialization.hpp"

namespace cavitygates {

/// One measured quantity; it passes when value <= tolerance.
struct Metric {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;

  bool passed() const { return value <= tolerance; }
};

enum class Status { Pass, Fail };

struct Report {
  std::string target;
  std::vector<Metric> metrics;
  std::optional<Json> artifacts;

  /// Fail iff any metric exceeds its tolerance.
  Status status() const;
};

Json to_json(const Report& r);
std::string to_text(const Report& r);

Report verify_cnot2();
Report verify_cnot3(int control, int target);
Report verify_spin_echo();
Report verify_toffoli(bool simplified);
/// Every check above plus the invariant, compensation and operator-identity checks.
Report verify_all();

}  // namespace cavitygates
