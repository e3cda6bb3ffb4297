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

#ifndef MECHSIMP_VERDICT_HPP
#define MECHSIMP_VERDICT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mechsimp/belief.hpp"
#include "mechsimp/game.hpp"
#include "mechsimp/mechanism.hpp"

namespace mechsimp {

// The parts of a profile that lie outside one player's control.
struct OtherMoves {
  std::map<int, int> infoset_actions;  // global information set id -> action
  ChancePolicy chance;

  friend bool operator==(const OtherMoves&, const OtherMoves&) = default;
};

// Against `others`, `deviation` earns strictly more than `reference`.
struct DeviationWitness {
  int player = -1;
  int type = -1;
  OtherMoves others;
  PureStrategy reference;
  PureStrategy deviation;
  Rational reference_payoff;
  Rational deviation_payoff;

  friend bool operator==(const DeviationWitness&, const DeviationWitness&) = default;
};

// The type has no dominant strategy: every pure strategy is refuted.
struct NoDominantWitness {
  int player = -1;
  int type = -1;
  std::vector<DeviationWitness> refutations;

  friend bool operator==(const NoDominantWitness&, const NoDominantWitness&) = default;
};

// At `infoset` the worst case of `plan` is below the best case of
// `deviation`. The free masks (local-indexed) mark own moves treated like
// opponent moves on each side.
struct BoundsWitness {
  int player = -1;
  int type = -1;
  int infoset = -1;
  PartialPlan plan;
  std::vector<bool> plan_free;
  PartialPlan deviation;
  std::vector<bool> deviation_free;
  Rational worst;
  Rational best;

  friend bool operator==(const BoundsWitness&, const BoundsWitness&) = default;
};

// Outsiders truthful; every coalition member strictly gains in expectation.
struct CoalitionWitness {
  std::vector<int> types;  // type profile
  std::vector<int> coalition;
  std::vector<PureStrategy> deviation;  // full profile
  std::vector<Rational> truthful_payoffs;   // per coalition member
  std::vector<Rational> deviation_payoffs;  // per coalition member

  friend bool operator==(const CoalitionWitness&, const CoalitionWitness&) = default;
};

struct SelectedStrategy {
  int player = -1;
  int type = -1;
  PureStrategy strategy;

  friend bool operator==(const SelectedStrategy&, const SelectedStrategy&) = default;
};

// Under `belief`, against the opponents' `selection` of undominated
// strategies, `better` earns strictly more than `candidate`.
struct SelectionWitness {
  int player = -1;
  int type = -1;
  FirstOrderBelief belief;
  std::vector<SelectedStrategy> selection;
  PureStrategy candidate;
  PureStrategy better;
  Rational candidate_value;
  Rational better_value;

  friend bool operator==(const SelectionWitness&, const SelectionWitness&) = default;
};

// No strategy of the type is robust under `belief`.
struct NoRobustWitness {
  int player = -1;
  int type = -1;
  FirstOrderBelief belief;
  std::vector<SelectionWitness> refutations;

  friend bool operator==(const NoRobustWitness&, const NoRobustWitness&) = default;
};

using Witness = std::variant<DeviationWitness, NoDominantWitness, BoundsWitness, CoalitionWitness, SelectionWitness,
                             NoRobustWitness>;

struct PlanRecord {
  int player = -1;
  int type = -1;
  int anchor = -1;
  PartialPlan plan;
  bool truthful_restriction = true;  // false when found by the fallback search
};

struct RobustRecord {
  int player = -1;
  int type = -1;
  std::string belief;
  std::vector<PureStrategy> robust;
};

struct Certificate {
  std::uint64_t evaluations = 0;
  std::uint64_t comparisons = 0;
  std::vector<std::string> notes;
  std::vector<PlanRecord> plans;
  std::vector<RobustRecord> robust;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  Certificate certificate;
};

// Re-evaluates a witness through the game engine (play, expected_payoff,
// payoff_bounds). True iff every recorded payoff is reproduced exactly and
// the claimed strict inequality holds.
bool replay(const Mechanism& mech, const Witness& witness);

// Expected payoff to `player` of type `type` playing `own`, when the
// opponents' types follow `belief` and each plays its selected strategy.
Rational belief_value(const Mechanism& mech, int player, int type, const PureStrategy& own,
                      const FirstOrderBelief& belief, const std::vector<SelectedStrategy>& selection);

}  // namespace mechsimp

#endif  // MECHSIMP_VERDICT_HPP
