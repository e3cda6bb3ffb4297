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

#include "mechsimp/foresight.hpp"

#include <algorithm>
#include <set>

#include "mechsimp/error.hpp"

namespace mechsimp {

namespace {

struct Restricted {
  PartialPlan plan;
  std::vector<bool> free;
};

// The plan cut down to F(anchor); everything else is marked free.
Restricted restrict_to(const GameTree& tree, int player, const PartialPlan& plan, int anchor,
                       const std::vector<int>& family) {
  const auto& own = tree.player_infosets(player);
  Restricted r{{player, anchor, std::vector<int>(own.size(), -1)}, std::vector<bool>(own.size(), true)};
  for (int g : family) {
    const int local = tree.infoset(g).local;
    if (!plan.defines(local))
      throw MalformedStrategy("plan is undefined at foreseeable information set " + tree.infoset(g).name);
    r.plan.actions[local] = plan.actions[local];
    r.free[local] = false;
  }
  return r;
}

struct BestDeviation {
  int action = -1;
  PayoffBounds bounds;
};

std::optional<BestDeviation> best_deviation(const GameTree& tree, int player, const Utility& utility, int anchor,
                                            int excluded) {
  const InfoSet& info = tree.infoset(anchor);
  std::optional<BestDeviation> best;
  for (int a = 0; a < static_cast<int>(info.actions.size()); ++a) {
    if (a == excluded) continue;
    PartialPlan open{player, anchor, std::vector<int>(tree.player_infosets(player).size(), -1)};
    open.actions[info.local] = a;
    PayoffBounds b = payoff_bounds(tree, player, utility, anchor, open);
    if (!best || best->bounds.max < b.max) best = BestDeviation{a, b};
  }
  return best;
}

// Own information sets whose experience passes through (anchor, action).
std::vector<int> below(const GameTree& tree, int player, int anchor, int action) {
  std::vector<int> out;
  for (int g : tree.player_infosets(player)) {
    if (g == anchor) continue;
    const auto exp = infoset_experience(tree, g);
    if (std::find(exp.begin(), exp.end(), std::pair{anchor, action}) != exp.end()) out.push_back(g);
  }
  return out;
}

}  // namespace

ForesightSpec ForesightSpec::custom(std::map<int, std::vector<int>> table) {
  ForesightSpec spec(ForesightPreset::kCustom);
  spec.table_ = std::move(table);
  return spec;
}

std::vector<int> ForesightSpec::family(const GameTree& tree, int infoset) const {
  const int player = tree.infoset(infoset).player;
  std::vector<int> out;
  switch (preset_) {
    case ForesightPreset::kFull:
      out = tree.player_infosets(player);
      break;
    case ForesightPreset::kSelf:
      break;
    case ForesightPreset::kOneStep:
      out = one_step_ahead(tree, player, infoset);
      break;
    case ForesightPreset::kCustom:
      if (auto it = table_.find(infoset); it != table_.end()) out = it->second;
      break;
  }
  out.push_back(infoset);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(ForesightPreset preset) {
  switch (preset) {
    case ForesightPreset::kFull:
      return "full";
    case ForesightPreset::kSelf:
      return "self";
    case ForesightPreset::kOneStep:
      return "one-step";
    case ForesightPreset::kCustom:
      return "custom";
  }
  return "?";
}

std::optional<ForesightPreset> parse_preset(const std::string& name) {
  if (name == "full") return ForesightPreset::kFull;
  if (name == "self") return ForesightPreset::kSelf;
  if (name == "one-step") return ForesightPreset::kOneStep;
  return std::nullopt;
}

std::vector<Violation> validate(const GameTree& tree, const ForesightSpec& spec) {
  std::vector<Violation> out;
  for (const auto& [anchor, members] : spec.table()) {
    if (anchor < 0 || anchor >= tree.num_infosets()) {
      out.push_back({"foresight", "unknown anchor information set " + std::to_string(anchor)});
      continue;
    }
    const InfoSet& info = tree.infoset(anchor);
    const std::string where = "foresight " + info.name;
    if (std::find(members.begin(), members.end(), anchor) == members.end())
      out.push_back({where, "the anchor must be foreseeable from itself"});
    for (int g : members) {
      if (g < 0 || g >= tree.num_infosets())
        out.push_back({where, "unknown information set " + std::to_string(g)});
      else if (tree.infoset(g).player != info.player)
        out.push_back({where, "information set " + tree.infoset(g).name + " belongs to another player"});
    }
  }
  return out;
}

std::vector<int> one_step_ahead(const GameTree& tree, int player, int infoset) {
  std::set<int> found;
  std::vector<int> stack;
  for (int n : tree.infoset(infoset).nodes)
    for (int c : tree.node(n).children) stack.push_back(c);
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (tree.player_at(id) == player) {
      found.insert(tree.node(id).infoset);
      continue;
    }
    for (int c : tree.node(id).children) stack.push_back(c);
  }
  return {found.begin(), found.end()};
}

bool f_dominant(const GameTree& tree, int player, const Utility& utility, const PartialPlan& plan,
                const ForesightSpec& spec) {
  if (plan.anchor < 0 || plan.anchor >= tree.num_infosets()) throw MalformedStrategy("plan has no anchor");
  const InfoSet& info = tree.infoset(plan.anchor);
  if (info.player != player) throw MalformedStrategy("plan anchor belongs to another player");
  const Restricted r = restrict_to(tree, player, plan, plan.anchor, spec.family(tree, plan.anchor));
  const auto dev = best_deviation(tree, player, utility, plan.anchor, r.plan.actions[info.local]);
  if (!dev) return true;
  return !(payoff_bounds(tree, player, utility, plan.anchor, r.plan, r.free).min < dev->bounds.max);
}

Verdict is_f_simple(const Mechanism& mech, const ForesightSpec& spec, Budget& budget) {
  const GameTree& tree = mech.tree;
  for (int p = 0; p < mech.num_players(); ++p)
    if (!mech.has_truthful(p)) throw Unsupported("mechanism has no truthful strategy for " + tree.player_name(p));
  if (auto bad = validate(tree, spec); !bad.empty()) throw MalformedStrategy(bad.front().where + ": " + bad.front().message);
  const std::uint64_t start = budget.used();
  Verdict v;
  v.certificate.notes.push_back("foresight " + to_string(spec.preset()));
  for (int p = 0; p < mech.num_players() && v.holds; ++p) {
    for (int t = 0; t < static_cast<int>(mech.types[p].size()) && v.holds; ++t) {
      const TypeSpec& type = mech.types[p][t];
      const PartialPlan truthful = PartialPlan::from(*type.truthful);
      for (int g : tree.player_infosets(p)) {
        if (!reachable_under(tree, g, truthful)) continue;
        const InfoSet& info = tree.infoset(g);
        const int action = truthful.actions[info.local];
        const std::vector<int> family = spec.family(tree, g);
        Restricted r = restrict_to(tree, p, truthful, g, family);
        budget.charge();
        ++v.certificate.comparisons;
        const auto dev = best_deviation(tree, p, type.utility, g, action);
        if (!dev) {
          v.certificate.plans.push_back({p, t, g, r.plan, true});
          continue;
        }
        const Rational truthful_worst = payoff_bounds(tree, p, type.utility, g, r.plan, r.free).min;
        if (!(truthful_worst < dev->bounds.max)) {
          v.certificate.plans.push_back({p, t, g, r.plan, true});
          continue;
        }

        std::vector<int> open;
        for (int j : below(tree, p, g, action))
          if (std::binary_search(family.begin(), family.end(), j)) open.push_back(j);
        bool found = false;
        PartialPlan candidate = r.plan;
        std::vector<int> digits(open.size(), 0);
        while (!open.empty()) {
          budget.charge();
          for (std::size_t k = 0; k < open.size(); ++k) candidate.actions[tree.infoset(open[k]).local] = digits[k];
          if (candidate != r.plan &&
              !(payoff_bounds(tree, p, type.utility, g, candidate, r.free).min < dev->bounds.max)) {
            found = true;
            break;
          }
          std::size_t k = open.size();
          while (k > 0 && ++digits[k - 1] == static_cast<int>(tree.infoset(open[k - 1]).actions.size()))
            digits[--k] = 0;
          if (k == 0) break;
        }
        if (found) {
          v.certificate.plans.push_back({p, t, g, candidate, false});
          continue;
        }

        PureStrategy deviation = *type.truthful;
        deviation.actions[info.local] = dev->action;
        for (const auto& [j, b] : own_choices_below(tree, dev->bounds.argmax_leaf, g))
          deviation.actions[tree.infoset(j).local] = b;
        const Restricted d = restrict_to(tree, p, PartialPlan::from(deviation), g, family);
        BoundsWitness w;
        w.player = p;
        w.type = t;
        w.infoset = g;
        w.plan = r.plan;
        w.plan_free = r.free;
        w.deviation = d.plan;
        w.deviation_free = d.free;
        w.worst = truthful_worst;
        w.best = dev->bounds.max;
        v.holds = false;
        v.witness = std::move(w);
        break;
      }
    }
  }
  v.certificate.evaluations = budget.used() - start;
  return v;
}

}  // namespace mechsimp
