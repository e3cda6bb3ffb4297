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

#include "mechsimp/belief.hpp"

#include <set>

namespace mechsimp {

std::vector<Violation> validate(const Mechanism& mech, const FirstOrderBelief& belief) {
  std::vector<Violation> out;
  const std::string where = "belief " + belief.name;
  const int n = mech.num_players();
  if (belief.owner < 0 || belief.owner >= n) {
    out.push_back({where, "unknown owner"});
    return out;
  }
  if (belief.support.empty()) out.push_back({where, "empty support"});
  Rational total;
  std::set<std::vector<int>> seen;
  for (const BeliefPoint& pt : belief.support) {
    if (pt.weight.sign() <= 0) out.push_back({where, "weight " + pt.weight.str() + " is not positive"});
    total += pt.weight;
    if (static_cast<int>(pt.types.size()) != n) {
      out.push_back({where, "a profile does not list every player"});
      continue;
    }
    for (int q = 0; q < n; ++q) {
      if (q == belief.owner) {
        if (pt.types[q] != -1) out.push_back({where, "the owner's own type must be left open"});
      } else if (pt.types[q] < 0 || pt.types[q] >= static_cast<int>(mech.types[q].size())) {
        out.push_back({where, "type out of range for " + mech.tree.player_name(q)});
      }
    }
    if (!seen.insert(pt.types).second) out.push_back({where, "repeated type profile"});
  }
  if (!belief.support.empty() && total != Rational(1))
    out.push_back({where, "weights sum to " + total.str()});
  return out;
}

std::vector<FirstOrderBelief> builtin_beliefs(const Mechanism& mech, int owner) {
  const int n = mech.num_players();
  std::vector<std::vector<int>> profiles;
  std::vector<int> types(n, 0);
  types[owner] = -1;
  for (int q = 0; q < n; ++q)
    if (q != owner && mech.types[q].empty()) return {};
  while (true) {
    profiles.push_back(types);
    int q = n - 1;
    for (; q >= 0; --q) {
      if (q == owner) continue;
      if (++types[q] < static_cast<int>(mech.types[q].size())) break;
      types[q] = 0;
    }
    if (q < 0) break;
  }

  std::vector<FirstOrderBelief> out;
  for (const auto& profile : profiles) {
    std::string name = "point";
    for (int q = 0; q < n; ++q)
      if (q != owner) name += "/" + mech.tree.player_name(q) + ":" + mech.types[q][profile[q]].name;
    out.push_back({owner, name, {{profile, Rational(1)}}});
  }
  if (profiles.size() > 1) {
    FirstOrderBelief uniform{owner, "uniform", {}};
    const Rational w(1, static_cast<std::int64_t>(profiles.size()));
    for (const auto& profile : profiles) uniform.support.push_back({profile, w});
    out.push_back(std::move(uniform));
  }
  return out;
}

}  // namespace mechsimp
