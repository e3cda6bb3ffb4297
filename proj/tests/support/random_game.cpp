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

#include "random_game.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"

namespace mechsimp::testing {
namespace {

using Experience = std::vector<std::pair<int, int>>;

class Builder {
 public:
  Builder(std::mt19937_64& rng, const RandomSpec& spec, int players)
      : rng_(rng), spec_(spec), experience_(players) {}

  GameTree build() {
    for (std::size_t p = 0; p < experience_.size(); ++p) tree_.add_player("p" + std::to_string(p + 1));
    tree_.set_root(grow(0));
    return std::move(tree_);
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  int grow(int depth) {
    if (depth == spec_.max_depth || (depth > 0 && coin(0.25)))
      return tree_.add_terminal(tree_.add_outcome("o" + std::to_string(uniform(1, spec_.outcome_pool))));
    const int k = uniform(2, spec_.max_branch);
    if (coin(spec_.chance_prob)) {
      std::vector<int> weights;
      int total = 0;
      for (int e = 0; e < k; ++e) total += weights.emplace_back(uniform(1, 3));
      std::vector<std::string> labels;
      std::vector<Rational> probs;
      for (int e = 0; e < k; ++e) {
        labels.push_back("c" + std::to_string(e));
        probs.emplace_back(weights[e], total);
      }
      const int id = tree_.add_chance(labels, probs);
      for (int e = 0; e < k; ++e) tree_.add_child(id, grow(depth + 1));
      return id;
    }
    const int player = uniform(0, static_cast<int>(experience_.size()) - 1);
    const int g = pick_infoset(player, k);
    const int id = tree_.add_decision(g);
    for (int a = 0; a < k; ++a) {
      experience_[player].emplace_back(g, a);
      tree_.add_child(id, grow(depth + 1));
      experience_[player].pop_back();
    }
    return id;
  }

  int pick_infoset(int player, int actions) {
    auto& pool = compatible_[{player, experience_[player]}];
    std::vector<int> fits;
    for (int g : pool)
      if (static_cast<int>(tree_.infoset(g).actions.size()) == actions) fits.push_back(g);
    if (!fits.empty() && coin(spec_.merge_prob)) return fits[uniform(0, static_cast<int>(fits.size()) - 1)];
    std::vector<std::string> labels;
    for (int a = 0; a < actions; ++a) labels.push_back("a" + std::to_string(a));
    const int g = tree_.add_infoset(player, "p" + std::to_string(player + 1) + ".i" + std::to_string(tree_.num_infosets()),
                                    labels);
    pool.push_back(g);
    return g;
  }

  std::mt19937_64& rng_;
  const RandomSpec& spec_;
  GameTree tree_;
  std::vector<Experience> experience_;
  std::map<std::pair<int, Experience>, std::vector<int>> compatible_;
};

std::optional<PureStrategy> first_dominant(const GameTree& tree, int player, const Utility& u) {
  const auto mine = all_strategies(tree, player);
  const auto profiles = all_opponent_profiles(tree, player);
  const auto policies = all_chance_policies(tree);
  std::vector<bool> alive(mine.size(), true);
  for (auto profile : profiles)
    for (const auto& chance : policies) {
      std::vector<Rational> v;
      for (const auto& s : mine) {
        profile[player] = s;
        v.push_back(u.at(tree.node(oracle_play(tree, profile, chance)).outcome));
      }
      Rational top = v.front();
      for (const auto& x : v) top = std::max(top, x);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] < top) alive[k] = false;
    }
  for (std::size_t k = 0; k < mine.size(); ++k)
    if (alive[k]) return mine[k];
  return std::nullopt;
}

}  // namespace

Mechanism random_mechanism(std::mt19937_64& rng, const RandomSpec& spec) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int players = std::uniform_int_distribution<int>(1, spec.max_players)(rng);
    Mechanism mech;
    mech.name = "random";
    mech.tree = Builder(rng, spec, players).build();
    const GameTree& tree = mech.tree;

    std::uint64_t profiles = all_chance_policies(tree).size();
    bool small = true;
    for (int p = 0; p < players && small; ++p) {
      const std::uint64_t n = count_strategies(tree, p);
      profiles *= n;
      small = n <= spec.max_strategies && profiles <= spec.max_profiles;
    }
    if (!small) continue;

    mech.types.resize(players);
    for (int p = 0; p < players; ++p) {
      const auto mine = all_strategies(tree, p);
      const int count = std::uniform_int_distribution<int>(1, spec.max_types)(rng);
      for (int t = 0; t < count; ++t) {
        TypeSpec type;
        type.name = "t" + std::to_string(t);
        for (int o = 0; o < tree.num_outcomes(); ++o)
          type.utility.emplace_back(std::uniform_int_distribution<int>(-spec.payoff_range, spec.payoff_range)(rng));
        std::optional<PureStrategy> truthful;
        if (std::bernoulli_distribution(spec.dominant_bias)(rng)) truthful = first_dominant(tree, p, type.utility);
        if (!truthful)
          truthful = mine[std::uniform_int_distribution<std::size_t>(0, mine.size() - 1)(rng)];
        type.truthful = std::move(truthful);
        mech.types[p].push_back(std::move(type));
      }
    }
    if (!validate(mech).empty()) throw std::logic_error("random generator produced an invalid mechanism");
    return mech;
  }
  throw std::runtime_error("random generator found no small enough game");
}

}  // namespace mechsimp::testing
