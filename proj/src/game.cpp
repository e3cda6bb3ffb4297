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

#include "mechsimp/game.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "mechsimp/error.hpp"

namespace mechsimp {

int GameTree::add_player(std::string name) {
  players_.push_back(std::move(name));
  player_infosets_.emplace_back();
  return num_players() - 1;
}

int GameTree::add_outcome(std::string label) {
  if (auto it = outcome_index_.find(label); it != outcome_index_.end()) return it->second;
  const int id = num_outcomes();
  outcome_index_.emplace(label, id);
  outcomes_.push_back(std::move(label));
  return id;
}

int GameTree::add_infoset(int player, std::string name, std::vector<std::string> actions) {
  InfoSet info;
  info.name = std::move(name);
  info.player = player;
  info.actions = std::move(actions);
  if (player >= 0 && player < num_players()) {
    info.local = static_cast<int>(player_infosets_[player].size());
    player_infosets_[player].push_back(num_infosets());
  }
  infosets_.push_back(std::move(info));
  return num_infosets() - 1;
}

int GameTree::add_decision(int infoset) {
  Node n;
  n.kind = NodeKind::kDecision;
  n.infoset = infoset;
  nodes_.push_back(std::move(n));
  parent_count_.push_back(0);
  const int id = num_nodes() - 1;
  if (infoset >= 0 && infoset < num_infosets()) infosets_[infoset].nodes.push_back(id);
  return id;
}

int GameTree::add_chance(std::vector<std::string> labels, std::vector<Rational> probs) {
  Node n;
  n.kind = NodeKind::kChance;
  n.labels = std::move(labels);
  n.probs = std::move(probs);
  nodes_.push_back(std::move(n));
  parent_count_.push_back(0);
  return num_nodes() - 1;
}

int GameTree::add_terminal(int outcome) {
  Node n;
  n.kind = NodeKind::kTerminal;
  n.outcome = outcome;
  nodes_.push_back(std::move(n));
  parent_count_.push_back(0);
  return num_nodes() - 1;
}

void GameTree::add_child(int node, int child) {
  nodes_.at(node).children.push_back(child);
  if (child >= 0 && child < num_nodes()) {
    if (parent_count_[child]++ == 0) nodes_[child].parent = node;
  }
}

std::optional<int> GameTree::find_infoset(const std::string& name) const {
  for (int i = 0; i < num_infosets(); ++i)
    if (infosets_[i].name == name) return i;
  return std::nullopt;
}

std::optional<int> GameTree::find_player(const std::string& name) const {
  for (int i = 0; i < num_players(); ++i)
    if (players_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> GameTree::find_outcome(const std::string& label) const {
  if (auto it = outcome_index_.find(label); it != outcome_index_.end()) return it->second;
  return std::nullopt;
}

int GameTree::player_at(int node) const {
  const Node& n = nodes_.at(node);
  if (n.kind != NodeKind::kDecision || n.infoset < 0 || n.infoset >= num_infosets()) return -1;
  return infosets_[n.infoset].player;
}

std::vector<std::pair<int, int>> experience(const GameTree& tree, int node, int player) {
  std::vector<std::pair<int, int>> seq;
  int child = node;
  int current = tree.node(node).parent;
  for (int steps = 0; current >= 0 && steps <= tree.num_nodes(); ++steps) {
    const Node& n = tree.node(current);
    if (n.kind == NodeKind::kDecision && tree.player_at(current) == player) {
      const auto it = std::find(n.children.begin(), n.children.end(), child);
      seq.emplace_back(n.infoset, static_cast<int>(it - n.children.begin()));
    }
    child = current;
    current = n.parent;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<std::pair<int, int>> infoset_experience(const GameTree& tree, int infoset) {
  const InfoSet& info = tree.infoset(infoset);
  if (info.nodes.empty()) return {};
  return experience(tree, info.nodes.front(), info.player);
}

bool reachable_under(const GameTree& tree, int infoset, const PartialPlan& plan) {
  for (const auto& [j, a] : infoset_experience(tree, infoset)) {
    const int local = tree.infoset(j).local;
    if (!plan.defines(local) || plan.actions[local] != a) return false;
  }
  return true;
}

std::vector<Violation> validate(const GameTree& tree) {
  std::vector<Violation> out;
  const int n = tree.num_nodes();
  auto at_node = [](int id) { return "node " + std::to_string(id); };

  if (n == 0) {
    out.push_back({"tree", "tree has no nodes"});
    return out;
  }
  if (tree.root() < 0 || tree.root() >= n) {
    out.push_back({"tree", "root " + std::to_string(tree.root()) + " is not a node"});
    return out;
  }

  bool structural_ok = true;
  for (int id = 0; id < n; ++id) {
    const Node& node = tree.node(id);
    const int parents = tree.parent_count(id);
    if (id == tree.root() && parents != 0) {
      out.push_back({at_node(id), "root has a parent"});
      structural_ok = false;
    } else if (id != tree.root() && parents != 1) {
      out.push_back({at_node(id), "node has " + std::to_string(parents) + " parents, expected 1"});
      structural_ok = false;
    }
    for (int c : node.children) {
      if (c < 0 || c >= n) {
        out.push_back({at_node(id), "child " + std::to_string(c) + " is not a node"});
        structural_ok = false;
      }
    }
    switch (node.kind) {
      case NodeKind::kDecision: {
        if (node.infoset < 0 || node.infoset >= tree.num_infosets()) {
          out.push_back({at_node(id), "unknown information set"});
          structural_ok = false;
          break;
        }
        const InfoSet& info = tree.infoset(node.infoset);
        if (node.children.size() != info.actions.size()) {
          out.push_back({"infoset " + info.name, at_node(id) + " has " + std::to_string(node.children.size()) +
                                                     " children but the information set has " +
                                                     std::to_string(info.actions.size()) + " actions"});
          structural_ok = false;
        }
        break;
      }
      case NodeKind::kChance: {
        if (node.children.empty()) {
          out.push_back({at_node(id), "chance node has no edges"});
          structural_ok = false;
        }
        if (node.probs.size() != node.children.size() || node.labels.size() != node.children.size()) {
          out.push_back({at_node(id), "chance edges, labels and probabilities differ in count"});
          structural_ok = false;
        }
        Rational sum;
        bool negative = false;
        for (const Rational& p : node.probs) {
          if (p.sign() < 0) negative = true;
          sum += p;
        }
        if (negative) out.push_back({at_node(id), "negative chance probability"});
        if (sum != Rational(1)) out.push_back({at_node(id), "probabilities sum to " + sum.str()});
        break;
      }
      case NodeKind::kTerminal:
        if (!node.children.empty()) {
          out.push_back({at_node(id), "terminal node has children"});
          structural_ok = false;
        }
        if (node.outcome < 0 || node.outcome >= tree.num_outcomes())
          out.push_back({at_node(id), "terminal node has no valid outcome"});
        break;
    }
  }

  if (structural_ok) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{tree.root()};
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      if (seen[id]) {
        out.push_back({at_node(id), "node reached twice (cycle)"});
        structural_ok = false;
        continue;
      }
      seen[id] = 1;
      for (int c : tree.node(id).children) stack.push_back(c);
    }
    for (int id = 0; id < n; ++id) {
      if (!seen[id]) {
        out.push_back({at_node(id), "node unreachable from the root"});
        structural_ok = false;
      }
    }
  }

  std::set<std::string> names;
  for (int i = 0; i < tree.num_infosets(); ++i) {
    const InfoSet& info = tree.infoset(i);
    const std::string where = "infoset " + info.name;
    if (!names.insert(info.name).second) out.push_back({where, "duplicate information set name"});
    if (info.player < 0 || info.player >= tree.num_players()) out.push_back({where, "unknown player"});
    if (info.actions.empty()) out.push_back({where, "information set has no actions"});
    if (std::set<std::string>(info.actions.begin(), info.actions.end()).size() != info.actions.size())
      out.push_back({where, "duplicate action labels"});
    if (info.nodes.empty()) out.push_back({where, "information set has no nodes"});
    if (!structural_ok || info.nodes.empty() || info.player < 0 || info.player >= tree.num_players()) continue;
    const auto reference = experience(tree, info.nodes.front(), info.player);
    for (std::size_t k = 1; k < info.nodes.size(); ++k) {
      if (experience(tree, info.nodes[k], info.player) != reference) {
        out.push_back({where, "perfect recall violated: " + at_node(info.nodes[k]) + " and " +
                                  at_node(info.nodes.front()) + " have different own histories"});
        break;
      }
    }
  }
  return out;
}

namespace {

int choose(const GameTree& tree, int id, std::span<const PureStrategy> profile, const ChancePolicy* chance) {
  const Node& node = tree.node(id);
  if (node.kind == NodeKind::kChance) {
    if (chance == nullptr) throw MalformedStrategy("no chance policy");
    auto it = chance->find(id);
    if (it == chance->end() || it->second < 0 || it->second >= static_cast<int>(node.children.size()))
      throw MalformedStrategy("chance policy has no edge for node " + std::to_string(id));
    return it->second;
  }
  const InfoSet& info = tree.infoset(node.infoset);
  if (info.player >= static_cast<int>(profile.size()))
    throw MalformedStrategy("profile has no strategy for player " + tree.player_name(info.player));
  const PureStrategy& s = profile[info.player];
  if (info.local >= static_cast<int>(s.actions.size()) || s.actions[info.local] < 0 ||
      s.actions[info.local] >= static_cast<int>(info.actions.size()))
    throw MalformedStrategy("strategy has no legal action at information set " + info.name);
  return s.actions[info.local];
}

void distribute(const GameTree& tree, int id, const Rational& weight, std::span<const PureStrategy> profile,
                std::map<int, Rational>& out) {
  const Node& node = tree.node(id);
  switch (node.kind) {
    case NodeKind::kTerminal:
      out[node.outcome] += weight;
      return;
    case NodeKind::kChance:
      for (std::size_t k = 0; k < node.children.size(); ++k)
        if (node.probs[k].sign() != 0) distribute(tree, node.children[k], weight * node.probs[k], profile, out);
      return;
    case NodeKind::kDecision:
      distribute(tree, node.children[choose(tree, id, profile, nullptr)], weight, profile, out);
      return;
  }
}

class BoundsWalker {
 public:
  BoundsWalker(const GameTree& tree, int player, const Utility& utility, const PartialPlan& plan,
               const std::vector<bool>& free_own)
      : tree_(tree), player_(player), utility_(utility), plan_(plan), free_(free_own) {}

  PayoffBounds walk(int id) const {
    const Node& node = tree_.node(id);
    if (node.kind == NodeKind::kTerminal) {
      const Rational& u = utility_.at(node.outcome);
      return {u, u, id, id};
    }
    if (node.kind == NodeKind::kDecision && tree_.player_at(id) == player_) {
      const int local = tree_.infoset(node.infoset).local;
      const bool open = local < static_cast<int>(free_.size()) && free_[local];
      if (plan_.defines(local) && !open) return walk(node.children[plan_.actions[local]]);
    }
    PayoffBounds acc = walk(node.children.front());
    for (std::size_t k = 1; k < node.children.size(); ++k) merge(acc, walk(node.children[k]));
    return acc;
  }

  static void merge(PayoffBounds& acc, const PayoffBounds& b) {
    if (b.min < acc.min) {
      acc.min = b.min;
      acc.argmin_leaf = b.argmin_leaf;
    }
    if (b.max > acc.max) {
      acc.max = b.max;
      acc.argmax_leaf = b.argmax_leaf;
    }
  }

 private:
  const GameTree& tree_;
  int player_;
  const Utility& utility_;
  const PartialPlan& plan_;
  const std::vector<bool>& free_;
};

}  // namespace

int play(const GameTree& tree, std::span<const PureStrategy> profile, const ChancePolicy& chance) {
  int id = tree.root();
  while (tree.node(id).kind != NodeKind::kTerminal) id = tree.node(id).children[choose(tree, id, profile, &chance)];
  return id;
}

std::map<int, Rational> outcome_distribution(const GameTree& tree, std::span<const PureStrategy> profile) {
  std::map<int, Rational> out;
  distribute(tree, tree.root(), Rational(1), profile, out);
  return out;
}

Rational expected_payoff(const GameTree& tree, std::span<const PureStrategy> profile, const Utility& utility) {
  Rational total;
  for (const auto& [outcome, p] : outcome_distribution(tree, profile)) total += p * utility.at(outcome);
  return total;
}

std::uint64_t count_strategies(const GameTree& tree, int player) {
  std::uint64_t count = 1;
  for (int j : tree.player_infosets(player)) {
    const std::uint64_t k = tree.infoset(j).actions.size();
    if (k == 0) return 0;
    if (count > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    count *= k;
  }
  return count;
}

StrategyEnumerator::StrategyEnumerator(const GameTree& tree, int player, std::uint64_t cap) {
  size_ = count_strategies(tree, player);
  if (size_ > cap)
    throw BudgetExceeded("player " + tree.player_name(player) + " has " +
                             (size_ == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                                 : std::to_string(size_)) +
                             " pure strategies",
                         cap);
  for (int j : tree.player_infosets(player)) radix_.push_back(static_cast<int>(tree.infoset(j).actions.size()));
  current_.player = player;
  current_.actions.assign(radix_.size(), 0);
}

bool StrategyEnumerator::next() {
  if (!started_) {
    started_ = true;
    return size_ > 0;
  }
  for (int k = static_cast<int>(radix_.size()) - 1; k >= 0; --k) {
    if (++current_.actions[k] < radix_[k]) return true;
    current_.actions[k] = 0;
  }
  return false;
}

std::vector<PureStrategy> enumerate_strategies(const GameTree& tree, int player, std::uint64_t cap) {
  StrategyEnumerator it(tree, player, cap);
  std::vector<PureStrategy> out;
  out.reserve(it.size());
  while (it.next()) out.push_back(it.current());
  return out;
}

PayoffBounds payoff_bounds(const GameTree& tree, int player, const Utility& utility, int infoset,
                           const PartialPlan& continuation, const std::vector<bool>& free_own) {
  const InfoSet& info = tree.infoset(infoset);
  if (info.player != player) throw MalformedStrategy("information set " + info.name + " belongs to another player");
  if (!continuation.defines(info.local))
    throw MalformedStrategy("continuation is undefined at information set " + info.name);
  const int action = continuation.actions[info.local];
  BoundsWalker walker(tree, player, utility, continuation, free_own);
  PayoffBounds acc = walker.walk(tree.node(info.nodes.front()).children[action]);
  for (std::size_t k = 1; k < info.nodes.size(); ++k)
    BoundsWalker::merge(acc, walker.walk(tree.node(info.nodes[k]).children[action]));
  return acc;
}

std::vector<std::pair<int, int>> own_choices_below(const GameTree& tree, int leaf, int infoset) {
  const int player = tree.infoset(infoset).player;
  std::vector<std::pair<int, int>> out;
  int child = leaf;
  int current = tree.node(leaf).parent;
  while (current >= 0) {
    const Node& n = tree.node(current);
    if (n.kind == NodeKind::kDecision && n.infoset == infoset) break;
    if (n.kind == NodeKind::kDecision && tree.player_at(current) == player) {
      const auto it = std::find(n.children.begin(), n.children.end(), child);
      out.emplace_back(n.infoset, static_cast<int>(it - n.children.begin()));
    }
    child = current;
    current = n.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace mechsimp
