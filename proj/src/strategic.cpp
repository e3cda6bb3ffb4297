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

#include "mechsimp/strategic.hpp"

#include <algorithm>
#include <map>

#include "mechsimp/dominance.hpp"
#include "mechsimp/error.hpp"

namespace mechsimp {

namespace {

void check_belief(const Mechanism& mech, int player, const FirstOrderBelief& belief) {
  if (belief.owner != player) throw MalformedStrategy("belief " + belief.name + " belongs to another player");
  if (auto bad = validate(mech, belief); !bad.empty())
    throw MalformedStrategy(bad.front().where + ": " + bad.front().message);
}

// Opponent (player, type) pairs appearing in the belief's support, sorted.
std::vector<std::pair<int, int>> slots_of(const FirstOrderBelief& belief) {
  std::vector<std::pair<int, int>> out;
  for (const BeliefPoint& pt : belief.support)
    for (int q = 0; q < static_cast<int>(pt.types.size()); ++q)
      if (q != belief.owner) out.emplace_back(q, pt.types[q]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PureStrategy> profile_for(int player, const PureStrategy& own, const BeliefPoint& pt,
                                      const std::map<std::pair<int, int>, const PureStrategy*>& chosen) {
  std::vector<PureStrategy> profile(pt.types.size());
  for (int q = 0; q < static_cast<int>(pt.types.size()); ++q)
    profile[q] = q == player ? own : *chosen.at({q, pt.types[q]});
  return profile;
}

}  // namespace

Rational belief_value(const Mechanism& mech, int player, int type, const PureStrategy& own,
                      const FirstOrderBelief& belief, const std::vector<SelectedStrategy>& selection) {
  std::map<std::pair<int, int>, const PureStrategy*> chosen;
  for (const SelectedStrategy& s : selection) chosen[{s.player, s.type}] = &s.strategy;
  Rational total;
  for (const BeliefPoint& pt : belief.support) {
    for (int q = 0; q < static_cast<int>(pt.types.size()); ++q)
      if (q != player && !chosen.contains({q, pt.types[q]}))
        throw MalformedStrategy("selection has no strategy for " + mech.tree.player_name(q) + " of type " +
                                mech.types[q].at(pt.types[q]).name);
    total += pt.weight * expected_payoff(mech.tree, profile_for(player, own, pt, chosen), mech.types[player][type].utility);
  }
  return total;
}

std::vector<std::vector<PureStrategy>> undominated(const Mechanism& mech, int player, Budget& budget) {
  const GameTree& tree = mech.tree;
  const std::vector<PureStrategy> all = enumerate_strategies(tree, player, budget.limit());
  const std::size_t k = all.size();
  const auto& types = mech.types[player];
  std::vector<std::vector<bool>> dominated(types.size(), std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      bool pending = false;
      for (std::size_t t = 0; t < types.size(); ++t) pending = pending || !dominated[t][j];
      if (!pending) continue;
      const auto pairs = outcome_pairs(tree, player, all[i], all[j], budget);
      for (std::size_t t = 0; t < types.size(); ++t) {
        if (dominated[t][j]) continue;
        const Utility& u = types[t].utility;
        bool weak = true, strict = false;
        for (const auto& [oi, oj] : pairs) {
          if (u[oi] < u[oj]) {
            weak = false;
            break;
          }
          if (u[oj] < u[oi]) strict = true;
        }
        if (weak && strict) dominated[t][j] = true;
      }
    }
  }
  std::vector<std::vector<PureStrategy>> out(types.size());
  for (std::size_t t = 0; t < types.size(); ++t)
    for (std::size_t j = 0; j < k; ++j)
      if (!dominated[t][j]) out[t].push_back(all[j]);
  return out;
}

UndominatedTable undominated_table(const Mechanism& mech, Budget& budget) {
  UndominatedTable table;
  for (int p = 0; p < mech.num_players(); ++p) table.push_back(undominated(mech, p, budget));
  return table;
}

std::vector<std::optional<SelectionWitness>> refute_candidates(const Mechanism& mech, int player, int type,
                                                               const FirstOrderBelief& belief,
                                                               const UndominatedTable& table,
                                                               const std::vector<PureStrategy>& candidates,
                                                               Budget& budget) {
  check_belief(mech, player, belief);
  const GameTree& tree = mech.tree;
  const Utility& utility = mech.types[player][type].utility;
  const std::vector<PureStrategy> replies = enumerate_strategies(tree, player, budget.limit());
  const auto slots = slots_of(belief);
  std::vector<std::optional<SelectionWitness>> out(candidates.size());

  auto witness = [&](std::size_t c, const std::vector<SelectedStrategy>& selection, const PureStrategy& better) {
    SelectionWitness w;
    w.player = player;
    w.type = type;
    w.belief = belief;
    w.selection = selection;
    w.candidate = candidates[c];
    w.better = better;
    w.candidate_value = belief_value(mech, player, type, candidates[c], belief, selection);
    w.better_value = belief_value(mech, player, type, better, belief, selection);
    return w;
  };

  std::vector<std::size_t> as_reply(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto it = std::find(replies.begin(), replies.end(), candidates[c]);
    if (it == replies.end()) throw MalformedStrategy("candidate is not a strategy of " + tree.player_name(player));
    as_reply[c] = static_cast<std::size_t>(it - replies.begin());
  }

  // The opponent with the most selections is minimized type by type; the
  // other opponents' selections are enumerated.
  int last = -1;
  double widest = 0;
  for (int q = 0; q < mech.num_players(); ++q) {
    if (q == player) continue;
    double width = 1;
    for (const auto& [sq, st] : slots)
      if (sq == q) width *= static_cast<double>(table[q][st].size());
    if (last == -1 || width > widest) last = q, widest = width;
  }
  std::vector<std::pair<int, int>> outer;
  for (const auto& slot : slots)
    if (slot.first != last) outer.push_back(slot);
  const auto& pts = belief.support;
  // Support points grouped by the minimized opponent's type.
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < pts.size(); ++k) groups[last == -1 ? -1 : pts[k].types[last]].push_back(k);
  auto inner_choices = [&](std::size_t k) -> const std::vector<PureStrategy>* {
    return last == -1 ? nullptr : &table[last][pts[k].types[last]];
  };

  std::vector<std::size_t> digits(outer.size(), 0);
  std::size_t open = candidates.size();
  while (open > 0) {
    std::map<std::pair<int, int>, const PureStrategy*> chosen;
    for (std::size_t k = 0; k < outer.size(); ++k)
      chosen[outer[k]] = &table[outer[k].first][outer[k].second][digits[k]];

    // values[r][k][j]: reply r at point k against the j-th choice of `last`.
    std::vector<std::vector<std::vector<Rational>>> values(replies.size(), std::vector<std::vector<Rational>>(pts.size()));
    for (std::size_t r = 0; r < replies.size(); ++r)
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto* inner = inner_choices(k);
        const std::size_t n = inner ? inner->size() : 1;
        for (std::size_t j = 0; j < n; ++j) {
          budget.charge();
          if (inner) chosen[{last, pts[k].types[last]}] = &(*inner)[j];
          values[r][k].push_back(expected_payoff(tree, profile_for(player, replies[r], pts[k], chosen), utility));
        }
      }

    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (out[c]) continue;
      const auto& mine = values[as_reply[c]];
      std::optional<Rational> worst;
      std::size_t worst_reply = 0;
      std::map<int, std::size_t> worst_pick;
      for (std::size_t r = 0; r < replies.size(); ++r) {
        Rational gap;
        std::map<int, std::size_t> pick;
        for (const auto& [key, members] : groups) {
          std::optional<Rational> low;
          for (std::size_t j = 0; j < mine[members.front()].size(); ++j) {
            Rational d;
            for (std::size_t k : members) d += pts[k].weight * (mine[k][j] - values[r][k][j]);
            if (!low || d < *low) low = d, pick[key] = j;
          }
          gap += *low;
        }
        if (gap.sign() < 0 && (!worst || gap < *worst)) worst = gap, worst_reply = r, worst_pick = pick;
      }
      if (!worst) continue;
      std::vector<SelectedStrategy> selection;
      for (const auto& [slot, strategy] : chosen)
        if (slot.first != last) selection.push_back({slot.first, slot.second, *strategy});
      if (last != -1)
        for (const auto& [key, j] : worst_pick) selection.push_back({last, key, table[last][key][j]});
      std::sort(selection.begin(), selection.end(), [](const SelectedStrategy& a, const SelectedStrategy& b) {
        return std::pair(a.player, a.type) < std::pair(b.player, b.type);
      });
      out[c] = witness(c, selection, replies[worst_reply]);
      --open;
    }

    std::size_t k = outer.size();
    while (k > 0 && ++digits[k - 1] == table[outer[k - 1].first][outer[k - 1].second].size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Verdict is_robust(const Mechanism& mech, int player, int type, const PureStrategy& strategy,
                  const FirstOrderBelief& belief, const UndominatedTable& table, Budget& budget) {
  const std::uint64_t start = budget.used();
  Verdict v;
  auto refuted = refute_candidates(mech, player, type, belief, table, {strategy}, budget);
  if (refuted.front()) {
    v.holds = false;
    v.witness = std::move(*refuted.front());
  }
  v.certificate.notes.push_back("pure strategies only");
  v.certificate.evaluations = budget.used() - start;
  return v;
}

Verdict is_robust(const Mechanism& mech, int player, int type, const PureStrategy& strategy,
                  const FirstOrderBelief& belief, Budget& budget) {
  return is_robust(mech, player, type, strategy, belief, undominated_table(mech, budget), budget);
}

std::vector<PureStrategy> robust_strategies(const Mechanism& mech, int player, int type,
                                            const FirstOrderBelief& belief, const UndominatedTable& table,
                                            Budget& budget) {
  const std::vector<PureStrategy> all = enumerate_strategies(mech.tree, player, budget.limit());
  const auto refuted = refute_candidates(mech, player, type, belief, table, all, budget);
  std::vector<PureStrategy> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (!refuted[k]) out.push_back(all[k]);
  return out;
}

Verdict is_strategically_simple(const Mechanism& mech, const std::vector<std::vector<FirstOrderBelief>>& families,
                                Budget& budget) {
  if (static_cast<int>(families.size()) != mech.num_players())
    throw MalformedStrategy("one belief family per player is required");
  for (int p = 0; p < mech.num_players(); ++p)
    if (families[p].empty()) throw MalformedStrategy("empty belief family for " + mech.tree.player_name(p));
  const std::uint64_t start = budget.used();
  Verdict v;
  v.certificate.notes.push_back("holds on supplied family");
  v.certificate.notes.push_back("pure strategies only");
  const UndominatedTable table = undominated_table(mech, budget);
  for (int p = 0; p < mech.num_players() && v.holds; ++p) {
    const std::vector<PureStrategy> all = enumerate_strategies(mech.tree, p, budget.limit());
    for (int t = 0; t < static_cast<int>(mech.types[p].size()) && v.holds; ++t) {
      for (const FirstOrderBelief& belief : families[p]) {
        ++v.certificate.comparisons;
        auto refuted = refute_candidates(mech, p, t, belief, table, all, budget);
        RobustRecord record{p, t, belief.name, {}};
        for (std::size_t k = 0; k < all.size(); ++k)
          if (!refuted[k]) record.robust.push_back(all[k]);
        const bool none = record.robust.empty();
        v.certificate.robust.push_back(std::move(record));
        if (!none) continue;
        NoRobustWitness w{p, t, belief, {}};
        for (auto& r : refuted) w.refutations.push_back(std::move(*r));
        v.holds = false;
        v.witness = std::move(w);
        break;
      }
    }
  }
  v.certificate.evaluations = budget.used() - start;
  return v;
}

Verdict is_strategically_simple(const Mechanism& mech, Budget& budget) {
  std::vector<std::vector<FirstOrderBelief>> families;
  for (int p = 0; p < mech.num_players(); ++p) families.push_back(builtin_beliefs(mech, p));
  return is_strategically_simple(mech, families, budget);
}

}  // namespace mechsimp
