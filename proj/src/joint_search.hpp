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

#ifndef MECHSIMP_SRC_JOINT_SEARCH_HPP
#define MECHSIMP_SRC_JOINT_SEARCH_HPP

#include <functional>
#include <span>
#include <vector>

#include "mechsimp/budget.hpp"
#include "mechsimp/game.hpp"

namespace mechsimp::detail {

// How a track proceeds at a non-terminal node.
struct Step {
  enum Kind : unsigned char {
    kFollow,  // take child `value`
    kBranch,  // take the child stored in shared variable `value`, trying every choice if unset
    kSplit,   // continue along every child, weighted by chance probabilities
  };
  Kind kind;
  int value;

  static Step follow(int action) { return {kFollow, action}; }
  static Step branch(int var) { return {kBranch, var}; }
  static Step split() { return {kSplit, -1}; }
};

struct Track {
  int start;
  std::function<Step(int node)> policy;
};

struct Arrival {
  int track;
  int leaf;
  Rational weight;
};

// Walks several tracks through one tree at once under a single assignment
// of shared variables, enumerating only the variables the tracks actually
// touch. Every complete assignment is reported exactly once, together with
// the leaves each track reached. Variables stand for information sets or
// chance nodes, so a choice made on one track binds every other track that
// meets the same variable.
class JointSearch {
 public:
  using Visit = std::function<bool(const std::vector<int>& assignment, std::span<const Arrival> arrivals)>;

  JointSearch(const GameTree& tree, int num_vars, Budget& budget)
      : tree_(tree), assignment_(num_vars, -1), budget_(budget) {}

  // False iff `visit` asked to stop.
  bool run(std::span<const Track> tracks, const Visit& visit);

 private:
  struct Pending {
    int track;
    int node;
    Rational weight;
  };

  bool explore(std::vector<Pending> pending, std::vector<Arrival> done);

  const GameTree& tree_;
  std::vector<int> assignment_;
  Budget& budget_;
  std::span<const Track> tracks_;
  const Visit* visit_ = nullptr;
};

// Variable numbering shared by the certifiers.
struct VarLayout {
  int infosets;
  int nodes;

  int size() const { return 2 * infosets + nodes; }
  int shared(int infoset) const { return infoset; }
  int deviation(int infoset) const { return infosets + infoset; }
  int chance(int node) const { return 2 * infosets + node; }
};

}  // namespace mechsimp::detail

#endif  // MECHSIMP_SRC_JOINT_SEARCH_HPP
