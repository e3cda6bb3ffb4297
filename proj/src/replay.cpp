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

#include <algorithm>
#include <set>

#include "mechsimp/error.hpp"
#include "mechsimp/strategic.hpp"
#include "mechsimp/verdict.hpp"

namespace mechsimp {

namespace {

bool valid_type(const Mechanism& mech, int player, int type) {
  return player >= 0 && player < mech.num_players() && type >= 0 &&
         type < static_cast<int>(mech.types[player].size());
}

// Unlisted opponent information sets and chance nodes take their first
// action or edge; the witness never reaches them.
std::vector<PureStrategy> complete(const GameTree& tree, int player, const PureStrategy& own,
                                   const OtherMoves& others) {
  std::vector<PureStrategy> profile(tree.num_players());
  for (int q = 0; q < tree.num_players(); ++q) {
    if (q == player) {
      profile[q] = own;
      continue;
    }
    profile[q].player = q;
    for (int g : tree.player_infosets(q)) {
      auto it = others.infoset_actions.find(g);
      profile[q].actions.push_back(it == others.infoset_actions.end() ? 0 : it->second);
    }
  }
  return profile;
}

ChancePolicy complete(const GameTree& tree, const ChancePolicy& chance) {
  ChancePolicy out = chance;
  for (int id = 0; id < tree.num_nodes(); ++id)
    if (tree.node(id).kind == NodeKind::kChance) out.emplace(id, 0);
  return out;
}

bool replay_one(const Mechanism& mech, const DeviationWitness& w) {
  if (!valid_type(mech, w.player, w.type)) return false;
  const GameTree& tree = mech.tree;
  const Utility& u = mech.types[w.player][w.type].utility;
  const ChancePolicy chance = complete(tree, w.others.chance);
  const int base = play(tree, complete(tree, w.player, w.reference, w.others), chance);
  const int dev = play(tree, complete(tree, w.player, w.deviation, w.others), chance);
  return u[tree.node(base).outcome] == w.reference_payoff && u[tree.node(dev).outcome] == w.deviation_payoff &&
         w.reference_payoff < w.deviation_payoff;
}

bool replay_one(const Mechanism& mech, const NoDominantWitness& w) {
  if (!valid_type(mech, w.player, w.type)) return false;
  std::set<std::vector<int>> refuted;
  for (const DeviationWitness& d : w.refutations) {
    if (d.player != w.player || d.type != w.type || !replay_one(mech, d)) return false;
    refuted.insert(d.reference.actions);
  }
  return refuted.size() == count_strategies(mech.tree, w.player);
}

bool replay_one(const Mechanism& mech, const BoundsWitness& w) {
  if (!valid_type(mech, w.player, w.type)) return false;
  const Utility& u = mech.types[w.player][w.type].utility;
  const int local = mech.tree.infoset(w.infoset).local;
  if (w.plan.actions.at(local) == w.deviation.actions.at(local)) return false;
  const Rational worst = payoff_bounds(mech.tree, w.player, u, w.infoset, w.plan, w.plan_free).min;
  const Rational best = payoff_bounds(mech.tree, w.player, u, w.infoset, w.deviation, w.deviation_free).max;
  return worst == w.worst && best == w.best && worst < best;
}

bool replay_one(const Mechanism& mech, const CoalitionWitness& w) {
  const int n = mech.num_players();
  if (static_cast<int>(w.types.size()) != n || static_cast<int>(w.deviation.size()) != n) return false;
  if (w.coalition.empty() || w.truthful_payoffs.size() != w.coalition.size() ||
      w.deviation_payoffs.size() != w.coalition.size())
    return false;
  std::vector<PureStrategy> truthful;
  for (int p = 0; p < n; ++p) {
    if (!valid_type(mech, p, w.types[p]) || !mech.types[p][w.types[p]].truthful) return false;
    truthful.push_back(*mech.types[p][w.types[p]].truthful);
  }
  const std::set<int> members(w.coalition.begin(), w.coalition.end());
  for (int p = 0; p < n; ++p)
    if (!members.contains(p) && !(w.deviation[p] == truthful[p])) return false;
  for (std::size_t k = 0; k < w.coalition.size(); ++k) {
    const Utility& u = mech.types[w.coalition[k]][w.types[w.coalition[k]]].utility;
    if (expected_payoff(mech.tree, truthful, u) != w.truthful_payoffs[k]) return false;
    if (expected_payoff(mech.tree, w.deviation, u) != w.deviation_payoffs[k]) return false;
    if (!(w.truthful_payoffs[k] < w.deviation_payoffs[k])) return false;
  }
  return true;
}

bool replay_one(const Mechanism& mech, const SelectionWitness& w) {
  if (!valid_type(mech, w.player, w.type)) return false;
  Budget budget;
  std::vector<std::optional<std::vector<std::vector<PureStrategy>>>> table(mech.num_players());
  for (const SelectedStrategy& s : w.selection) {
    if (!valid_type(mech, s.player, s.type)) return false;
    auto& cached = table[s.player];
    if (!cached) cached = undominated(mech, s.player, budget);
    const auto& allowed = (*cached)[s.type];
    if (std::find(allowed.begin(), allowed.end(), s.strategy) == allowed.end()) return false;
  }
  const Rational candidate = belief_value(mech, w.player, w.type, w.candidate, w.belief, w.selection);
  const Rational better = belief_value(mech, w.player, w.type, w.better, w.belief, w.selection);
  return candidate == w.candidate_value && better == w.better_value && candidate < better;
}

bool replay_one(const Mechanism& mech, const NoRobustWitness& w) {
  if (!valid_type(mech, w.player, w.type)) return false;
  std::set<std::vector<int>> refuted;
  for (const SelectionWitness& s : w.refutations) {
    if (s.player != w.player || s.type != w.type || !(s.belief == w.belief) || !replay_one(mech, s)) return false;
    refuted.insert(s.candidate.actions);
  }
  return refuted.size() == count_strategies(mech.tree, w.player);
}

}  // namespace

bool replay(const Mechanism& mech, const Witness& witness) {
  try {
    return std::visit([&](const auto& w) { return replay_one(mech, w); }, witness);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace mechsimp
