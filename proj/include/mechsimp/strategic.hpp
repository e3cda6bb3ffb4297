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

#ifndef MECHSIMP_STRATEGIC_HPP
#define MECHSIMP_STRATEGIC_HPP

#include <optional>
#include <vector>

#include "mechsimp/belief.hpp"
#include "mechsimp/budget.hpp"
#include "mechsimp/mechanism.hpp"
#include "mechsimp/verdict.hpp"

namespace mechsimp {

// [player][type] -> pure strategies not weakly dominated for that type.
using UndominatedTable = std::vector<std::vector<std::vector<PureStrategy>>>;

// Per type of `player`, in enumeration order.
std::vector<std::vector<PureStrategy>> undominated(const Mechanism& mech, int player, Budget& budget);

UndominatedTable undominated_table(const Mechanism& mech, Budget& budget);

// For each candidate, nothing if it is a best response under `belief` to
// every selection of undominated opponent strategies, otherwise a
// selection together with a strictly better reply.
std::vector<std::optional<SelectionWitness>> refute_candidates(const Mechanism& mech, int player, int type,
                                                               const FirstOrderBelief& belief,
                                                               const UndominatedTable& table,
                                                               const std::vector<PureStrategy>& candidates,
                                                               Budget& budget);

Verdict is_robust(const Mechanism& mech, int player, int type, const PureStrategy& strategy,
                  const FirstOrderBelief& belief, const UndominatedTable& table, Budget& budget);

Verdict is_robust(const Mechanism& mech, int player, int type, const PureStrategy& strategy,
                  const FirstOrderBelief& belief, Budget& budget);

std::vector<PureStrategy> robust_strategies(const Mechanism& mech, int player, int type,
                                            const FirstOrderBelief& belief, const UndominatedTable& table,
                                            Budget& budget);

// Every player and type has a robust pure strategy under every belief in
// that player's family. Only the supplied beliefs are examined.
Verdict is_strategically_simple(const Mechanism& mech, const std::vector<std::vector<FirstOrderBelief>>& families,
                                Budget& budget);

// Same, over builtin_beliefs for every player.
Verdict is_strategically_simple(const Mechanism& mech, Budget& budget);

}  // namespace mechsimp

#endif  // MECHSIMP_STRATEGIC_HPP
