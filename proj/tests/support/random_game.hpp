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

#ifndef MECHSIMP_TESTS_RANDOM_GAME_HPP
#define MECHSIMP_TESTS_RANDOM_GAME_HPP

#include <cstdint>
#include <random>

#include "mechsimp/mechanism.hpp"

namespace mechsimp::testing {

struct RandomSpec {
  int max_players = 3;
  int max_depth = 4;
  int max_branch = 3;
  int max_types = 4;
  int payoff_range = 3;  // utilities drawn from [-range, range]
  int outcome_pool = 6;
  double chance_prob = 0.15;
  double merge_prob = 0.5;     // joining an existing compatible information set
  double dominant_bias = 0.7;  // truthful := a dominant strategy when one exists
  // Keeps the brute-force oracles cheap.
  std::uint64_t max_strategies = 81;
  std::uint64_t max_profiles = 20000;
};

// A valid mechanism with perfect recall. Information sets only merge nodes
// that share the mover's experience and action count.
Mechanism random_mechanism(std::mt19937_64& rng, const RandomSpec& spec = {});

}  // namespace mechsimp::testing

#endif  // MECHSIMP_TESTS_RANDOM_GAME_HPP
