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

#ifndef MECHSIMP_BELIEF_HPP
#define MECHSIMP_BELIEF_HPP

#include <string>
#include <vector>

#include "mechsimp/mechanism.hpp"
#include "mechsimp/rational.hpp"

namespace mechsimp {

struct BeliefPoint {
  std::vector<int> types;  // type index per player; the owner's entry is -1
  Rational weight;

  friend bool operator==(const BeliefPoint&, const BeliefPoint&) = default;
};

// A player's distribution over the other players' type profiles.
struct FirstOrderBelief {
  int owner = -1;
  std::string name;
  std::vector<BeliefPoint> support;

  friend bool operator==(const FirstOrderBelief&, const FirstOrderBelief&) = default;
};

// Weights positive and summing to exactly one, types within the declared
// spaces, no repeated profile.
std::vector<Violation> validate(const Mechanism& mech, const FirstOrderBelief& belief);

// A point mass on every opponent type profile, then the uniform belief.
std::vector<FirstOrderBelief> builtin_beliefs(const Mechanism& mech, int owner);

}  // namespace mechsimp

#endif  // MECHSIMP_BELIEF_HPP
