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

#ifndef MECHSIMP_DOMINANCE_HPP
#define MECHSIMP_DOMINANCE_HPP

#include <optional>
#include <set>
#include <utility>

#include "mechsimp/budget.hpp"
#include "mechsimp/game.hpp"
#include "mechsimp/mechanism.hpp"
#include "mechsimp/verdict.hpp"

namespace mechsimp {

// Distinct (outcome under s, outcome under s2) pairs over every opponent
// pure-strategy profile and chance policy. Only information sets and
// chance nodes met on the two paths are enumerated.
std::set<std::pair<int, int>> outcome_pairs(const GameTree& tree, int player, const PureStrategy& s,
                                            const PureStrategy& s2, Budget& budget);

// s is always at least as good as s2 and strictly better at least once.
bool weakly_dominates(const GameTree& tree, int player, const Utility& utility, const PureStrategy& s,
                      const PureStrategy& s2, Budget& budget);

// Some strategy and opponent behaviour under which deviating from
// `reference` strictly pays, or nothing if `reference` is a best response
// to every opponent profile and chance policy.
std::optional<DeviationWitness> profitable_deviation(const GameTree& tree, int player, const Utility& utility,
                                                     const PureStrategy& reference, Budget& budget);

// First pure strategy (in enumeration order) that is a best response to
// every opponent profile and chance policy.
std::optional<PureStrategy> dominant_strategy(const GameTree& tree, int player, const Utility& utility,
                                              Budget& budget);

// At every earliest point of divergence, the worst case of s is at least
// the best case of s2.
bool obviously_dominates(const GameTree& tree, int player, const Utility& utility, const PureStrategy& s,
                         const PureStrategy& s2);

// Truthful play is a best response everywhere. Players without truthful
// maps must instead have a dominant strategy for every type.
Verdict is_strategy_proof(const Mechanism& mech, Budget& budget);

Verdict is_osp(const Mechanism& mech, Budget& budget);

// No coalition of at most `max_coalition` players can jointly deviate,
// outsiders truthful, so that every member strictly gains (in expectation
// when the tree has chance nodes).
Verdict is_weakly_group_sp(const Mechanism& mech, int max_coalition, Budget& budget);

}  // namespace mechsimp

#endif  // MECHSIMP_DOMINANCE_HPP
