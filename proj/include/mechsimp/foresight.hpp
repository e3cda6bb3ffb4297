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

#ifndef MECHSIMP_FORESIGHT_HPP
#define MECHSIMP_FORESIGHT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mechsimp/budget.hpp"
#include "mechsimp/game.hpp"
#include "mechsimp/mechanism.hpp"
#include "mechsimp/verdict.hpp"

namespace mechsimp {

enum class ForesightPreset { kFull, kSelf, kOneStep, kCustom };

// Which own information sets a player can plan for while standing at I.
class ForesightSpec {
 public:
  ForesightSpec() = default;
  explicit ForesightSpec(ForesightPreset preset) : preset_(preset) {}
  // Anchors absent from the table foresee only themselves.
  static ForesightSpec custom(std::map<int, std::vector<int>> table);

  ForesightPreset preset() const { return preset_; }
  const std::map<int, std::vector<int>>& table() const { return table_; }

  // F(I), sorted by global id; always contains I.
  std::vector<int> family(const GameTree& tree, int infoset) const;

 private:
  ForesightPreset preset_ = ForesightPreset::kFull;
  std::map<int, std::vector<int>> table_;
};

std::string to_string(ForesightPreset preset);
std::optional<ForesightPreset> parse_preset(const std::string& name);

// Custom tables only: every entry names information sets of the anchor's
// owner and contains the anchor.
std::vector<Violation> validate(const GameTree& tree, const ForesightSpec& spec);

// Own information sets reachable from some node of I, through any action,
// without passing another own decision node on the way.
std::vector<int> one_step_ahead(const GameTree& tree, int player, int infoset);

// Worst case of `plan` from its anchor, against the best case of any plan
// choosing differently at the anchor. Own moves outside F(anchor) count as
// free on both sides. The plan must be defined on F(anchor).
bool f_dominant(const GameTree& tree, int player, const Utility& utility, const PartialPlan& plan,
                const ForesightSpec& spec);

// Every own information set reachable under truthful play admits an
// F-dominant plan taking the truthful action there. The truthful
// restriction is tried first; otherwise plans over the foreseeable
// information sets below the truthful action are searched.
Verdict is_f_simple(const Mechanism& mech, const ForesightSpec& spec, Budget& budget);

inline Verdict strong_osp(const Mechanism& mech, Budget& budget) {
  return is_f_simple(mech, ForesightSpec(ForesightPreset::kSelf), budget);
}

inline Verdict one_step_simple(const Mechanism& mech, Budget& budget) {
  return is_f_simple(mech, ForesightSpec(ForesightPreset::kOneStep), budget);
}

}  // namespace mechsimp

#endif  // MECHSIMP_FORESIGHT_HPP
