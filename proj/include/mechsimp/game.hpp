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

#ifndef MECHSIMP_GAME_HPP
#define MECHSIMP_GAME_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mechsimp/rational.hpp"

namespace mechsimp {

enum class NodeKind : std::uint8_t { kDecision, kChance, kTerminal };

struct Node {
  NodeKind kind = NodeKind::kTerminal;
  int infoset = -1;                 // decision nodes
  int outcome = -1;                 // terminal nodes
  std::vector<int> children;        // decision: parallel to the infoset's actions
  std::vector<Rational> probs;      // chance: parallel to children
  std::vector<std::string> labels;  // chance: edge labels
  int parent = -1;

  friend bool operator==(const Node&, const Node&) = default;
};

struct InfoSet {
  std::string name;
  int player = -1;
  std::vector<std::string> actions;
  std::vector<int> nodes;  // members, in insertion order
  int local = -1;          // index among the owning player's information sets

  friend bool operator==(const InfoSet&, const InfoSet&) = default;
};

// Payoff per outcome id; total on the tree's outcomes.
using Utility = std::vector<Rational>;

// Chance node id -> chosen edge index.
using ChancePolicy = std::map<int, int>;

// One action index per information set of `player`, indexed by the
// information set's `local` position.
struct PureStrategy {
  int player = -1;
  std::vector<int> actions;

  friend bool operator==(const PureStrategy&, const PureStrategy&) = default;
  friend auto operator<=>(const PureStrategy&, const PureStrategy&) = default;
};

// Like PureStrategy, but -1 marks information sets the plan leaves open.
struct PartialPlan {
  int player = -1;
  int anchor = -1;  // global information set id, -1 when not anchored
  std::vector<int> actions;

  static PartialPlan from(const PureStrategy& s) { return {s.player, -1, s.actions}; }
  bool defines(int local) const { return local >= 0 && local < static_cast<int>(actions.size()) && actions[local] >= 0; }

  friend bool operator==(const PartialPlan&, const PartialPlan&) = default;
};

// Finite extensive-form game. Built incrementally through the add_*
// methods; node 0 is the root unless set_root says otherwise. The builder
// accepts malformed structure so that validate() can report it.
class GameTree {
 public:
  int add_player(std::string name);
  // Returns the existing id when the label is already registered.
  int add_outcome(std::string label);
  int add_infoset(int player, std::string name, std::vector<std::string> actions);
  int add_decision(int infoset);
  int add_chance(std::vector<std::string> labels, std::vector<Rational> probs);
  int add_terminal(int outcome);
  void add_child(int node, int child);
  void set_root(int node) { root_ = node; }

  int root() const { return root_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }

  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  const InfoSet& infoset(int id) const { return infosets_.at(id); }
  std::optional<int> find_infoset(const std::string& name) const;

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::string& player_name(int p) const { return players_.at(p); }
  std::optional<int> find_player(const std::string& name) const;
  const std::vector<int>& player_infosets(int p) const { return player_infosets_.at(p); }

  int num_outcomes() const { return static_cast<int>(outcomes_.size()); }
  const std::string& outcome_label(int id) const { return outcomes_.at(id); }
  std::optional<int> find_outcome(const std::string& label) const;

  // Player to move at a decision node, -1 otherwise.
  int player_at(int node) const;
  // Number of parents recorded for a node (1 for a well-formed non-root).
  int parent_count(int node) const { return parent_count_.at(node); }

  friend bool operator==(const GameTree& a, const GameTree& b) {
    return a.players_ == b.players_ && a.outcomes_ == b.outcomes_ && a.infosets_ == b.infosets_ &&
           a.nodes_ == b.nodes_ && a.root_ == b.root_;
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::string> outcomes_;
  std::map<std::string, int> outcome_index_;
  std::vector<InfoSet> infosets_;
  std::vector<std::vector<int>> player_infosets_;
  std::vector<Node> nodes_;
  std::vector<int> parent_count_;
  int root_ = 0;
};

struct Violation {
  std::string where;  // "node 7", "infoset b1.bid", ...
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty iff the tree is a rooted finite tree with consistent information
// sets, well-formed chance distributions and perfect recall.
std::vector<Violation> validate(const GameTree& tree);

// (own information set, action) pairs on the root path of `node`, for the
// given player.
std::vector<std::pair<int, int>> experience(const GameTree& tree, int node, int player);

// Experience of the first member of an information set. Under perfect
// recall this is shared by every member.
std::vector<std::pair<int, int>> infoset_experience(const GameTree& tree, int infoset);

// True when every own move leading to `infoset` agrees with the plan.
bool reachable_under(const GameTree& tree, int infoset, const PartialPlan& plan);

// Leaf reached from the root. Throws MalformedStrategy when a reached
// information set or chance node has no entry.
int play(const GameTree& tree, std::span<const PureStrategy> profile, const ChancePolicy& chance);

// Outcome id -> probability, chance-averaged under the true probabilities.
std::map<int, Rational> outcome_distribution(const GameTree& tree, std::span<const PureStrategy> profile);

Rational expected_payoff(const GameTree& tree, std::span<const PureStrategy> profile, const Utility& utility);

// Product of action counts over the player's information sets, saturating
// at UINT64_MAX.
std::uint64_t count_strategies(const GameTree& tree, int player);

inline constexpr std::uint64_t kDefaultStrategyCap = 10'000'000;

// Odometer over every pure strategy of one player, in lexicographic order
// of local information set indices. Refuses (BudgetExceeded) when the
// count exceeds `cap`.
class StrategyEnumerator {
 public:
  StrategyEnumerator(const GameTree& tree, int player, std::uint64_t cap = kDefaultStrategyCap);

  std::uint64_t size() const { return size_; }
  // Advances to the next strategy; the first call yields the first one.
  bool next();
  const PureStrategy& current() const { return current_; }

 private:
  std::vector<int> radix_;
  PureStrategy current_;
  std::uint64_t size_ = 0;
  bool started_ = false;
};

std::vector<PureStrategy> enumerate_strategies(const GameTree& tree, int player,
                                               std::uint64_t cap = kDefaultStrategyCap);

struct PayoffBounds {
  Rational min;
  Rational max;
  int argmin_leaf = -1;
  int argmax_leaf = -1;
};

// Worst and best payoff to `player`, over every member of `infoset`, every
// opponent action and chance edge below it, and every own action the
// continuation leaves open or that lies in `free_own` (indexed by local
// information set). Elsewhere the player follows the continuation. Throws
// MalformedStrategy when the continuation is undefined at `infoset`.
PayoffBounds payoff_bounds(const GameTree& tree, int player, const Utility& utility, int infoset,
                           const PartialPlan& continuation, const std::vector<bool>& free_own = {});

// Own (information set, action) choices on the root path of `leaf` that
// lie strictly below `infoset`, in path order.
std::vector<std::pair<int, int>> own_choices_below(const GameTree& tree, int leaf, int infoset);

}  // namespace mechsimp

#endif  // MECHSIMP_GAME_HPP
