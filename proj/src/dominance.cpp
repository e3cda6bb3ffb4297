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

#include "mechsimp/dominance.hpp"

#include <bit>

#include "joint_search.hpp"
#include "mechsimp/error.hpp"

namespace mechsimp {

namespace {

using detail::Arrival;
using detail::JointSearch;
using detail::Step;
using detail::Track;
using detail::VarLayout;

VarLayout layout_of(const GameTree& tree) { return {tree.num_infosets(), tree.num_nodes()}; }

Step others_step(const GameTree& tree, const VarLayout& vars, int node) {
  const Node& n = tree.node(node);
  if (n.kind == NodeKind::kChance) return Step::branch(vars.chance(node));
  return Step::branch(vars.shared(n.infoset));
}

Track fixed_track(const GameTree& tree, const VarLayout& vars, int player, const PureStrategy& s) {
  return {tree.root(), [&tree, vars, player, &s](int node) {
            if (tree.player_at(node) == player) return Step::follow(s.actions[tree.infoset(tree.node(node).infoset).local]);
            return others_step(tree, vars, node);
          }};
}

Track deviating_track(const GameTree& tree, const VarLayout& vars, int player) {
  return {tree.root(), [&tree, vars, player](int node) {
            if (tree.player_at(node) == player) return Step::branch(vars.deviation(tree.node(node).infoset));
            return others_step(tree, vars, node);
          }};
}

int leaf_of(std::span<const Arrival> arrivals, int track) {
  for (const Arrival& a : arrivals)
    if (a.track == track) return a.leaf;
  return -1;
}

OtherMoves decode_others(const GameTree& tree, const VarLayout& vars, int player, const std::vector<int>& assignment) {
  OtherMoves out;
  for (int g = 0; g < tree.num_infosets(); ++g)
    if (tree.infoset(g).player != player && assignment[vars.shared(g)] >= 0)
      out.infoset_actions[g] = assignment[vars.shared(g)];
  for (int id = 0; id < tree.num_nodes(); ++id)
    if (tree.node(id).kind == NodeKind::kChance && assignment[vars.chance(id)] >= 0)
      out.chance[id] = assignment[vars.chance(id)];
  return out;
}

void check_strategy(const GameTree& tree, int player, const PureStrategy& s) {
  const auto& own = tree.player_infosets(player);
  if (s.player != player || s.actions.size() != own.size())
    throw MalformedStrategy("strategy does not cover the information sets of " + tree.player_name(player));
  for (std::size_t k = 0; k < own.size(); ++k)
    if (s.actions[k] < 0 || s.actions[k] >= static_cast<int>(tree.infoset(own[k]).actions.size()))
      throw MalformedStrategy("illegal action at information set " + tree.infoset(own[k]).name);
}

void require_truthful(const Mechanism& mech) {
  for (int p = 0; p < mech.num_players(); ++p)
    if (!mech.has_truthful(p))
      throw Unsupported("mechanism has no truthful strategy for " + mech.tree.player_name(p));
}

}  // namespace

std::set<std::pair<int, int>> outcome_pairs(const GameTree& tree, int player, const PureStrategy& s,
                                            const PureStrategy& s2, Budget& budget) {
  check_strategy(tree, player, s);
  check_strategy(tree, player, s2);
  const VarLayout vars = layout_of(tree);
  const std::vector<Track> tracks{fixed_track(tree, vars, player, s), fixed_track(tree, vars, player, s2)};
  std::set<std::pair<int, int>> out;
  JointSearch(tree, vars.size(), budget).run(tracks, [&](const std::vector<int>&, std::span<const Arrival> arrivals) {
    out.emplace(tree.node(leaf_of(arrivals, 0)).outcome, tree.node(leaf_of(arrivals, 1)).outcome);
    return true;
  });
  return out;
}

bool weakly_dominates(const GameTree& tree, int player, const Utility& utility, const PureStrategy& s,
                      const PureStrategy& s2, Budget& budget) {
  bool strict = false;
  for (const auto& [o1, o2] : outcome_pairs(tree, player, s, s2, budget)) {
    if (utility[o1] < utility[o2]) return false;
    if (utility[o1] > utility[o2]) strict = true;
  }
  return strict;
}

std::optional<DeviationWitness> profitable_deviation(const GameTree& tree, int player, const Utility& utility,
                                                     const PureStrategy& reference, Budget& budget) {
  check_strategy(tree, player, reference);
  const VarLayout vars = layout_of(tree);
  const std::vector<Track> tracks{fixed_track(tree, vars, player, reference), deviating_track(tree, vars, player)};
  std::optional<DeviationWitness> found;
  JointSearch(tree, vars.size(), budget)
      .run(tracks, [&](const std::vector<int>& assignment, std::span<const Arrival> arrivals) {
        const Rational& base = utility[tree.node(leaf_of(arrivals, 0)).outcome];
        const Rational& dev = utility[tree.node(leaf_of(arrivals, 1)).outcome];
        if (!(dev > base)) return true;
        DeviationWitness w;
        w.player = player;
        w.others = decode_others(tree, vars, player, assignment);
        w.reference = reference;
        w.deviation = reference;
        for (int g : tree.player_infosets(player))
          if (assignment[vars.deviation(g)] >= 0) w.deviation.actions[tree.infoset(g).local] = assignment[vars.deviation(g)];
        w.reference_payoff = base;
        w.deviation_payoff = dev;
        found = std::move(w);
        return false;
      });
  return found;
}

std::optional<PureStrategy> dominant_strategy(const GameTree& tree, int player, const Utility& utility,
                                              Budget& budget) {
  StrategyEnumerator it(tree, player, budget.limit());
  while (it.next())
    if (!profitable_deviation(tree, player, utility, it.current(), budget)) return it.current();
  return std::nullopt;
}

bool obviously_dominates(const GameTree& tree, int player, const Utility& utility, const PureStrategy& s,
                         const PureStrategy& s2) {
  check_strategy(tree, player, s);
  check_strategy(tree, player, s2);
  const PartialPlan plan = PartialPlan::from(s);
  const PartialPlan other = PartialPlan::from(s2);
  for (int g : tree.player_infosets(player)) {
    const int local = tree.infoset(g).local;
    if (s.actions[local] == s2.actions[local]) continue;
    if (!reachable_under(tree, g, plan) || !reachable_under(tree, g, other)) continue;
    const Rational worst = payoff_bounds(tree, player, utility, g, plan).min;
    const Rational best = payoff_bounds(tree, player, utility, g, other).max;
    if (worst < best) return false;
  }
  return true;
}

Verdict is_strategy_proof(const Mechanism& mech, Budget& budget) {
  const GameTree& tree = mech.tree;
  const std::uint64_t start = budget.used();
  Verdict v;
  for (int p = 0; p < mech.num_players() && v.holds; ++p) {
    const bool designed = mech.has_truthful(p);
    if (!designed)
      v.certificate.notes.push_back("no truthful map for " + tree.player_name(p) +
                                    "; searched for a dominant strategy per type");
    for (int t = 0; t < static_cast<int>(mech.types[p].size()) && v.holds; ++t) {
      const TypeSpec& type = mech.types[p][t];
      ++v.certificate.comparisons;
      if (designed) {
        if (auto w = profitable_deviation(tree, p, type.utility, *type.truthful, budget)) {
          w->type = t;
          v.holds = false;
          v.witness = std::move(*w);
        }
        continue;
      }
      NoDominantWitness nd{p, t, {}};
      bool dominant = false;
      StrategyEnumerator it(tree, p, budget.limit());
      while (it.next()) {
        auto w = profitable_deviation(tree, p, type.utility, it.current(), budget);
        if (!w) {
          dominant = true;
          break;
        }
        w->type = t;
        nd.refutations.push_back(std::move(*w));
      }
      if (!dominant) {
        v.holds = false;
        v.witness = std::move(nd);
      }
    }
  }
  v.certificate.evaluations = budget.used() - start;
  return v;
}

Verdict is_osp(const Mechanism& mech, Budget& budget) {
  require_truthful(mech);
  const GameTree& tree = mech.tree;
  const std::uint64_t start = budget.used();
  Verdict v;
  for (int p = 0; p < mech.num_players() && v.holds; ++p) {
    const auto& own = tree.player_infosets(p);
    for (int t = 0; t < static_cast<int>(mech.types[p].size()) && v.holds; ++t) {
      const TypeSpec& type = mech.types[p][t];
      const PartialPlan truthful = PartialPlan::from(*type.truthful);
      for (int g : own) {
        if (!v.holds) break;
        if (!reachable_under(tree, g, truthful)) continue;
        const InfoSet& info = tree.infoset(g);
        budget.charge();
        const Rational worst = payoff_bounds(tree, p, type.utility, g, truthful).min;
        for (int a = 0; a < static_cast<int>(info.actions.size()); ++a) {
          if (a == truthful.actions[info.local]) continue;
          budget.charge();
          ++v.certificate.comparisons;
          PartialPlan open{p, g, std::vector<int>(own.size(), -1)};
          open.actions[info.local] = a;
          const PayoffBounds dev = payoff_bounds(tree, p, type.utility, g, open);
          if (!(worst < dev.max)) continue;
          PureStrategy deviation = *type.truthful;
          deviation.actions[info.local] = a;
          for (const auto& [j, b] : own_choices_below(tree, dev.argmax_leaf, g))
            deviation.actions[tree.infoset(j).local] = b;
          BoundsWitness w;
          w.player = p;
          w.type = t;
          w.infoset = g;
          w.plan = truthful;
          w.deviation = PartialPlan::from(deviation);
          w.worst = worst;
          w.best = dev.max;
          v.holds = false;
          v.witness = std::move(w);
          break;
        }
      }
    }
  }
  v.certificate.evaluations = budget.used() - start;
  return v;
}

Verdict is_weakly_group_sp(const Mechanism& mech, int max_coalition, Budget& budget) {
  require_truthful(mech);
  const GameTree& tree = mech.tree;
  const int n = mech.num_players();
  if (n > 20) throw Unsupported("coalition search supports at most 20 players");
  if (max_coalition < 1) throw Unsupported("coalition size must be at least 1");
  max_coalition = std::min(max_coalition, n);
  const std::uint64_t start = budget.used();
  const VarLayout vars = layout_of(tree);
  Verdict v;

  std::vector<unsigned> coalitions;
  for (int size = 1; size <= max_coalition; ++size)
    for (unsigned mask = 1; mask < (1u << n); ++mask)
      if (std::popcount(mask) == size) coalitions.push_back(mask);

  std::vector<int> types(n, 0);
  for (int p = 0; p < n; ++p)
    if (mech.types[p].empty()) return v;
  while (v.holds) {
    std::vector<PureStrategy> truthful;
    for (int p = 0; p < n; ++p) truthful.push_back(*mech.types[p][types[p]].truthful);
    std::vector<Rational> base(n);
    for (int p = 0; p < n; ++p) base[p] = expected_payoff(tree, truthful, mech.types[p][types[p]].utility);

    for (unsigned mask : coalitions) {
      ++v.certificate.comparisons;
      const std::vector<Track> tracks{{tree.root(), [&](int node) {
                                         const Node& nd = tree.node(node);
                                         if (nd.kind == NodeKind::kChance) return Step::split();
                                         const int p = tree.player_at(node);
                                         if (mask & (1u << p)) return Step::branch(vars.shared(nd.infoset));
                                         return Step::follow(truthful[p].actions[tree.infoset(nd.infoset).local]);
                                       }}};
      JointSearch(tree, vars.size(), budget)
          .run(tracks, [&](const std::vector<int>& assignment, std::span<const Arrival> arrivals) {
            std::vector<Rational> gain(n);
            for (const Arrival& a : arrivals)
              for (int p = 0; p < n; ++p)
                if (mask & (1u << p)) gain[p] += a.weight * mech.types[p][types[p]].utility[tree.node(a.leaf).outcome];
            for (int p = 0; p < n; ++p)
              if ((mask & (1u << p)) && !(gain[p] > base[p])) return true;
            CoalitionWitness w;
            w.types = types;
            w.deviation = truthful;
            for (int p = 0; p < n; ++p) {
              if (!(mask & (1u << p))) continue;
              w.coalition.push_back(p);
              for (int g : tree.player_infosets(p))
                if (assignment[vars.shared(g)] >= 0) w.deviation[p].actions[tree.infoset(g).local] = assignment[vars.shared(g)];
              w.truthful_payoffs.push_back(base[p]);
              w.deviation_payoffs.push_back(gain[p]);
            }
            v.holds = false;
            v.witness = std::move(w);
            return false;
          });
      if (!v.holds) break;
    }

    int p = n - 1;
    while (p >= 0 && ++types[p] == static_cast<int>(mech.types[p].size())) types[p--] = 0;
    if (p < 0) break;
  }
  v.certificate.evaluations = budget.used() - start;
  return v;
}

}  // namespace mechsimp
