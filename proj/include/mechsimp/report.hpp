// Copyright 2026 The mechsimp Authors.
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

#ifndef MECHSIMP_REPORT_HPP
#define MECHSIMP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mechsimp/belief.hpp"
#include "mechsimp/foresight.hpp"
#include "mechsimp/gamedoc.hpp"
#include "mechsimp/verdict.hpp"

namespace mechsimp {

enum class Criterion { kSP, kOSP, kWGSP, kStrongOSP, kOneStep, kFSimple, kStrategic };

std::string to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view name);

struct CheckOptions {
  Criterion criterion = Criterion::kSP;
  int coalition_size = 2;
  // f-simple only; falls back to the document's table, then to full.
  std::optional<ForesightSpec> foresight;
  // strategic only; falls back to the document's beliefs, then to the
  // built-in family. Players left uncovered get the built-in family.
  std::optional<std::vector<FirstOrderBelief>> beliefs;
  std::uint64_t budget = 0;  // 0 means default_budget()
};

struct CheckResult {
  bool holds = false;
  Verdict verdict;
  std::string json;  // one line, no trailing newline
};

// Runs the certifier and renders a report. Budget, construction and
// strategy errors propagate as exceptions.
CheckResult run_check(const GameDoc& doc, const CheckOptions& options);

// Witnesses as JSON, naming players, types, information sets and actions.
std::string witness_to_json(const Mechanism& mech, const Witness& witness);
// Throws MalformedStrategy when the text does not describe a witness of
// this mechanism.
Witness witness_from_json(const Mechanism& mech, std::string_view json);

}  // namespace mechsimp

#endif  // MECHSIMP_REPORT_HPP
