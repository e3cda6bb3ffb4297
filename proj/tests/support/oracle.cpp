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

#include "oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mechsimp::testing {
namespace {

int own_local(const GameTree& tree, int infoset) { return tree.infoset(infoset).local; }

int action_of(const GameTree& tree, const PureStrategy& s, int infoset) {
  return s.actions.at(own_local(tree, infoset));
}

bool passes_through(const GameTree& tree, int leaf, int infoset) {
  for (int n = leaf; n != -1; n = tree.node(n).parent)
    if (tree.node(n).kind == NodeKind::kDecision && tree.node(n).infoset == infoset) return true;
  return false;
}

void collect_leaves(const GameTree& tree, int node, std::vector<int>& out) {
  const Node& n = tree.node(node);
  if (n.kind == NodeKind::kTerminal) {
    out.push_back(node);
    return;
  }
  for (int c : n.children) collect_leaves(tree, c, out);
}

// Own (information set, action) pairs on the root path to `node`, root first.
std::vector<std::pair<int, int>> own_history(const GameTree& tree, int node, int player) {
  std::vector<std::pair<int, int>> out;
  for (int child = node, n = tree.node(node).parent; n != -1; child = n, n = tree.node(n).parent) {
    const Node& p = tree.node(n);
    if (p.kind != NodeKind::kDecision || tree.infoset(p.infoset).player != player) continue;
    const auto it = std::find(p.children.begin(), p.children.end(), child);
    out.emplace_back(p.infoset, static_cast<int>(it - p.children.begin()));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Every (opponent profile, chance policy) context for `player`.
struct Contexts {
  std::vector<std::vector<PureStrategy>> profiles;
  std::vector<ChancePolicy> chance;
};

Contexts contexts(const GameTree& tree, int player) {
  return {all_opponent_profiles(tree, player), all_chance_policies(tree)};
}

Rational payoff(const GameTree& tree, const Utility& u, std::vector<PureStrategy> profile, int player,
                const PureStrategy& s, const ChancePolicy& chance) {
  profile[player] = s;
  return u.at(tree.node(oracle_play(tree, profile, chance)).outcome);
}

template <class F>
void for_each_product(const std::vector<int>& radix, F&& f) {
  std::vector<int> digits(radix.size(), 0);
  for (int r : radix)
    if (r == 0) return;
  while (true) {
    f(digits);
    int k = static_cast<int>(radix.size()) - 1;
    while (k >= 0 && ++digits[k] == radix[k]) digits[k--] = 0;
    if (k < 0) return;
  }
}

}  // namespace

std::vector<PureStrategy> all_strategies(const GameTree& tree, int player) {
  const auto& sets = tree.player_infosets(player);
  std::vector<int> radix;
  for (int g : sets) radix.push_back(static_cast<int>(tree.infoset(g).actions.size()));
  std::vector<PureStrategy> out;
  for_each_product(radix, [&](const std::vector<int>& d) { out.push_back({player, d}); });
  return out;
}

std::vector<ChancePolicy> all_chance_policies(const GameTree& tree) {
  std::vector<int> ids, radix;
  for (int n = 0; n < tree.num_nodes(); ++n)
    if (tree.node(n).kind == NodeKind::kChance) {
      ids.push_back(n);
      radix.push_back(static_cast<int>(tree.node(n).children.size()));
    }
  std::vector<ChancePolicy> out;
  for_each_product(radix, [&](const std::vector<int>& d) {
    ChancePolicy c;
    for (std::size_t k = 0; k < ids.size(); ++k) c[ids[k]] = d[k];
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<std::vector<PureStrategy>> all_opponent_profiles(const GameTree& tree, int player) {
  std::vector<std::vector<PureStrategy>> lists;
  std::vector<int> radix;
  for (int p = 0; p < tree.num_players(); ++p) {
    lists.push_back(p == player ? std::vector<PureStrategy>{PureStrategy{p, {}}} : all_strategies(tree, p));
    radix.push_back(static_cast<int>(lists.back().size()));
  }
  std::vector<std::vector<PureStrategy>> out;
  for_each_product(radix, [&](const std::vector<int>& d) {
    std::vector<PureStrategy> profile;
    for (std::size_t p = 0; p < d.size(); ++p) profile.push_back(lists[p][d[p]]);
    out.push_back(std::move(profile));
  });
  return out;
}

int oracle_play(const GameTree& tree, const std::vector<PureStrategy>& profile, const ChancePolicy& chance) {
  int n = tree.root();
  while (tree.node(n).kind != NodeKind::kTerminal) {
    const Node& node = tree.node(n);
    if (node.kind == NodeKind::kChance) {
      n = node.children.at(chance.at(n));
    } else {
      const InfoSet& g = tree.infoset(node.infoset);
      n = node.children.at(profile.at(g.player).actions.at(g.local));
    }
  }
  return n;
}

Rational oracle_expected(const GameTree& tree, const std::vector<PureStrategy>& profile, const Utility& utility) {
  std::function<Rational(int)> walk = [&](int n) -> Rational {
    const Node& node = tree.node(n);
    switch (node.kind) {
      case NodeKind::kTerminal:
        return utility.at(node.outcome);
      case NodeKind::kChance: {
        Rational sum;
        for (std::size_t k = 0; k < node.children.size(); ++k) sum += node.probs[k] * walk(node.children[k]);
        return sum;
      }
      case NodeKind::kDecision: {
        const InfoSet& g = tree.infoset(node.infoset);
        return walk(node.children.at(profile.at(g.player).actions.at(g.local)));
      }
    }
    return Rational();
  };
  return walk(tree.root());
}

bool oracle_weakly_dominates(const GameTree& tree, int player, const Utility& u, const PureStrategy& s,
                             const PureStrategy& s2) {
  const Contexts ctx = contexts(tree, player);
  bool strict = false;
  for (const auto& profile : ctx.profiles)
    for (const auto& chance : ctx.chance) {
      const Rational a = payoff(tree, u, profile, player, s, chance);
      const Rational b = payoff(tree, u, profile, player, s2, chance);
      if (a < b) return false;
      if (a > b) strict = true;
    }
  return strict;
}

bool oracle_obviously_dominates(const GameTree& tree, int player, const Utility& u, const PureStrategy& s,
                                const PureStrategy& s2) {
  const Contexts ctx = contexts(tree, player);
  for (int g : tree.player_infosets(player)) {
    if (action_of(tree, s, g) == action_of(tree, s2, g)) continue;
    bool earliest = true;
    for (auto [j, a] : own_history(tree, tree.infoset(g).nodes.front(), player))
      if (action_of(tree, s, j) != a || action_of(tree, s2, j) != a) earliest = false;
    if (!earliest) continue;
    std::optional<Rational> worst, best;
    for (const auto& base : ctx.profiles)
      for (const auto& chance : ctx.chance) {
        auto profile = base;
        profile[player] = s;
        const int leaf = oracle_play(tree, profile, chance);
        if (passes_through(tree, leaf, g)) {
          const Rational v = u.at(tree.node(leaf).outcome);
          if (!worst || v < *worst) worst = v;
        }
        profile[player] = s2;
        const int leaf2 = oracle_play(tree, profile, chance);
        if (passes_through(tree, leaf2, g)) {
          const Rational v = u.at(tree.node(leaf2).outcome);
          if (!best || v > *best) best = v;
        }
      }
    if (worst && best && *worst < *best) return false;
  }
  return true;
}

bool oracle_has_dominant(const GameTree& tree, int player, const Utility& u) {
  const auto mine = all_strategies(tree, player);
  const Contexts ctx = contexts(tree, player);
  std::vector<bool> alive(mine.size(), true);
  for (const auto& profile : ctx.profiles)
    for (const auto& chance : ctx.chance) {
      std::vector<Rational> v;
      for (const auto& s : mine) v.push_back(payoff(tree, u, profile, player, s, chance));
      const Rational top = *std::max_element(v.begin(), v.end());
      for (std::size_t k = 0; k < mine.size(); ++k)
        if (v[k] < top) alive[k] = false;
    }
  return std::find(alive.begin(), alive.end(), true) != alive.end();
}

bool oracle_sp(const Mechanism& mech) {
  const GameTree& tree = mech.tree;
  for (int p = 0; p < tree.num_players(); ++p) {
    const auto mine = all_strategies(tree, p);
    const Contexts ctx = contexts(tree, p);
    for (const auto& type : mech.types[p]) {
      if (!type.truthful) {
        if (!oracle_has_dominant(tree, p, type.utility)) return false;
        continue;
      }
      for (const auto& profile : ctx.profiles)
        for (const auto& chance : ctx.chance) {
          const Rational t = payoff(tree, type.utility, profile, p, *type.truthful, chance);
          for (const auto& s : mine)
            if (payoff(tree, type.utility, profile, p, s, chance) > t) return false;
        }
    }
  }
  return true;
}

bool oracle_osp(const Mechanism& mech) {
  const GameTree& tree = mech.tree;
  for (int p = 0; p < tree.num_players(); ++p) {
    const auto mine = all_strategies(tree, p);
    for (const auto& type : mech.types[p])
      for (const auto& s : mine)
        if (!oracle_obviously_dominates(tree, p, type.utility, *type.truthful, s)) return false;
  }
  return true;
}

bool oracle_wgsp(const Mechanism& mech, int max_coalition) {
  const GameTree& tree = mech.tree;
  const int n = tree.num_players();
  std::vector<std::vector<PureStrategy>> lists;
  std::vector<int> radix;
  for (int p = 0; p < n; ++p) {
    lists.push_back(all_strategies(tree, p));
    radix.push_back(static_cast<int>(lists.back().size()));
  }
  // Outcome distribution of every full profile, by mixed-radix index.
  std::vector<std::map<int, Rational>> dist;
  for_each_product(radix, [&](const std::vector<int>& d) {
    std::vector<PureStrategy> profile;
    for (int p = 0; p < n; ++p) profile.push_back(lists[p][d[p]]);
    std::map<int, Rational> out;
    std::function<void(int, Rational)> walk = [&](int node, Rational w) {
      const Node& x = tree.node(node);
      if (x.kind == NodeKind::kTerminal) {
        out[x.outcome] += w;
      } else if (x.kind == NodeKind::kChance) {
        for (std::size_t k = 0; k < x.children.size(); ++k) walk(x.children[k], w * x.probs[k]);
      } else {
        const InfoSet& g = tree.infoset(x.infoset);
        walk(x.children.at(profile[g.player].actions.at(g.local)), w);
      }
    };
    walk(tree.root(), Rational(1));
    dist.push_back(std::move(out));
  });
  const auto index = [&](const std::vector<int>& d) {
    std::size_t i = 0;
    for (int p = 0; p < n; ++p) i = i * radix[p] + d[p];
    return i;
  };
  const auto value = [&](std::size_t profile, const Utility& u) {
    Rational v;
    for (const auto& [o, w] : dist[profile]) v += w * u.at(o);
    return v;
  };

  std::vector<int> type_radix;
  for (int p = 0; p < n; ++p) type_radix.push_back(static_cast<int>(mech.types[p].size()));
  bool ok = true;
  for_each_product(type_radix, [&](const std::vector<int>& types) {
    if (!ok) return;
    std::vector<int> truthful(n);
    for (int p = 0; p < n; ++p) {
      const auto& t = *mech.types[p][types[p]].truthful;
      truthful[p] = static_cast<int>(std::find(lists[p].begin(), lists[p].end(), t) - lists[p].begin());
    }
    const std::size_t base = index(truthful);
    for (unsigned mask = 1; mask < (1u << n) && ok; ++mask) {
      std::vector<int> members;
      for (int p = 0; p < n; ++p)
        if (mask & (1u << p)) members.push_back(p);
      if (static_cast<int>(members.size()) > max_coalition) continue;
      std::vector<int> sub;
      for (int p : members) sub.push_back(radix[p]);
      for_each_product(sub, [&](const std::vector<int>& d) {
        if (!ok) return;
        auto full = truthful;
        for (std::size_t k = 0; k < members.size(); ++k) full[members[k]] = d[k];
        const std::size_t dev = index(full);
        bool all_gain = true;
        for (int p : members) {
          const Utility& u = mech.types[p][types[p]].utility;
          if (!(value(dev, u) > value(base, u))) all_gain = false;
        }
        if (all_gain) ok = false;
      });
    }
  });
  return ok;
}

bool oracle_f_simple(const Mechanism& mech, const Family& family) {
  const GameTree& tree = mech.tree;
  for (int p = 0; p < tree.num_players(); ++p)
    for (const auto& type : mech.types[p]) {
      const PureStrategy& t = *type.truthful;
      const Utility& u = type.utility;
      for (int g : tree.player_infosets(p)) {
        bool reachable = true;
        for (auto [j, a] : own_history(tree, tree.infoset(g).nodes.front(), p))
          if (action_of(tree, t, j) != a) reachable = false;
        if (!reachable) continue;
        const int a = action_of(tree, t, g);
        std::optional<Rational> best;
        std::vector<int> truthful_leaves;
        for (int x : tree.infoset(g).nodes) {
          const Node& node = tree.node(x);
          for (int b = 0; b < static_cast<int>(node.children.size()); ++b) {
            std::vector<int> leaves;
            collect_leaves(tree, node.children[b], leaves);
            if (b == a) {
              truthful_leaves.insert(truthful_leaves.end(), leaves.begin(), leaves.end());
              continue;
            }
            for (int leaf : leaves) {
              const Rational v = u.at(tree.node(leaf).outcome);
              if (!best || v > *best) best = v;
            }
          }
        }
        if (!best) continue;
        std::vector<int> planned;
        for (int h : family(g))
          if (h != g) planned.push_back(h);
        std::vector<int> radix;
        for (int h : planned) radix.push_back(static_cast<int>(tree.infoset(h).actions.size()));
        bool found = false;
        for_each_product(radix, [&](const std::vector<int>& plan) {
          if (found) return;
          std::map<int, int> chosen;
          for (std::size_t k = 0; k < planned.size(); ++k) chosen[planned[k]] = plan[k];
          std::optional<Rational> worst;
          for (int leaf : truthful_leaves) {
            bool consistent = true;
            for (auto [j, b] : own_history(tree, leaf, p)) {
              const auto it = chosen.find(j);
              if (it != chosen.end() && it->second != b) consistent = false;
            }
            if (!consistent) continue;
            const Rational v = u.at(tree.node(leaf).outcome);
            if (!worst || v < *worst) worst = v;
          }
          if (worst && *worst >= *best) found = true;
        });
        if (!found) return false;
      }
    }
  return true;
}

std::vector<int> oracle_one_step(const GameTree& tree, int infoset) {
  const int player = tree.infoset(infoset).player;
  std::set<int> out;
  for (int y = 0; y < tree.num_nodes(); ++y) {
    const Node& node = tree.node(y);
    if (node.kind != NodeKind::kDecision || tree.infoset(node.infoset).player != player) continue;
    int z = node.parent;
    while (z != -1 && !(tree.node(z).kind == NodeKind::kDecision && tree.infoset(tree.node(z).infoset).player == player))
      z = tree.node(z).parent;
    if (z != -1 && tree.node(z).infoset == infoset) out.insert(node.infoset);
  }
  return {out.begin(), out.end()};
}

std::vector<PureStrategy> oracle_undominated(const GameTree& tree, int player, const Utility& u) {
  const auto mine = all_strategies(tree, player);
  std::vector<PureStrategy> out;
  for (const auto& s : mine) {
    bool dominated = false;
    for (const auto& s2 : mine)
      if (oracle_weakly_dominates(tree, player, u, s2, s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<PureStrategy> oracle_robust(const Mechanism& mech, int player, int type, const FirstOrderBelief& belief) {
  const GameTree& tree = mech.tree;
  std::vector<std::pair<int, int>> slots;
  for (const auto& pt : belief.support)
    for (int q = 0; q < static_cast<int>(pt.types.size()); ++q)
      if (q != player && std::find(slots.begin(), slots.end(), std::pair(q, pt.types[q])) == slots.end())
        slots.emplace_back(q, pt.types[q]);
  std::vector<std::vector<PureStrategy>> choices;
  std::vector<int> radix;
  for (auto [q, t] : slots) {
    choices.push_back(oracle_undominated(tree, q, mech.types[q][t].utility));
    radix.push_back(static_cast<int>(choices.back().size()));
  }
  const auto mine = all_strategies(tree, player);
  std::vector<bool> alive(mine.size(), true);
  for_each_product(radix, [&](const std::vector<int>& d) {
    std::vector<Rational> v;
    for (const auto& s : mine) {
      Rational total;
      for (const auto& pt : belief.support) {
        std::vector<PureStrategy> profile(tree.num_players());
        for (int q = 0; q < tree.num_players(); ++q) {
          if (q == player) {
            profile[q] = s;
            continue;
          }
          const auto k = std::find(slots.begin(), slots.end(), std::pair(q, pt.types[q])) - slots.begin();
          profile[q] = choices[k][d[k]];
        }
        total += pt.weight * oracle_expected(tree, profile, mech.types[player][type].utility);
      }
      v.push_back(total);
    }
    const Rational top = *std::max_element(v.begin(), v.end());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] < top) alive[k] = false;
  });
  std::vector<PureStrategy> out;
  for (std::size_t k = 0; k < mine.size(); ++k)
    if (alive[k]) out.push_back(mine[k]);
  return out;
}

}  // namespace mechsimp::testing
