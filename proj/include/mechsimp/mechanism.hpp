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

#ifndef MECHSIMP_MECHANISM_HPP
#define MECHSIMP_MECHANISM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mechsimp/game.hpp"
#include "mechsimp/rational.hpp"

namespace mechsimp {

// One private type of a player: a utility over outcomes and, when the
// designer intends one, the truthful strategy for that type.
struct TypeSpec {
  std::string name;
  Utility utility;
  std::optional<PureStrategy> truthful;

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

struct Mechanism {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  GameTree tree;
  std::vector<std::vector<TypeSpec>> types;  // per player

  bool has_truthful(int player) const;
  bool has_truthful() const;
  int num_players() const { return tree.num_players(); }

  friend bool operator==(const Mechanism&, const Mechanism&) = default;
};

// Tree violations plus type-space checks: utilities total on the outcomes,
// truthful strategies legal for their player.
std::vector<Violation> validate(const Mechanism& mech);

// Who wins among tied top bids, and which bidder an exhausted clock favours.
enum class TiePolicy { kLowestIndex, kHighestIndex };

// Clock behaviour at price == value: keep bidding (and risk a zero-payoff
// win) or drop out.
enum class ClockBoundary { kContinueAtValue, kQuitAtValue };

struct AuctionParams {
  int bidders = 2;
  std::vector<Rational> values;  // type grid (costs for reverse_clock)
  std::vector<Rational> prices;  // bid grid / clock ladder; empty means `values`
  std::optional<Rational> step;  // when set, the ladder must advance by exactly this much
  std::vector<int> order;        // clock asking order; empty derives it from `tie`
  TiePolicy tie = TiePolicy::kLowestIndex;
  ClockBoundary boundary = ClockBoundary::kContinueAtValue;
};

struct TradeParams {
  std::vector<Rational> prices;  // offer grid shared by seller and buyer
  std::vector<Rational> costs;   // seller types
  std::vector<Rational> values;  // buyer types
  Rational alpha{1};
};

// Inclusive arithmetic grid lo, lo+step, ..., <= hi.
std::vector<Rational> arithmetic_grid(const Rational& lo, const Rational& hi, const Rational& step = Rational(1));

// Sealed bids, highest bid wins and pays the highest competing bid.
// Simultaneity is encoded by one information set per bidder.
Mechanism second_price(const AuctionParams& params);

// Ascending clock: active bidders are asked in a fixed cyclic order to bid
// the current clock price or quit irrevocably; the price rises one rung
// per full round. The last bidder standing wins and pays their last bid
// (the opening price if they never bid). If the ladder runs out with
// several bidders still in, the tie policy picks the winner at the top
// price. The default asking order puts the bidder favoured by the tie
// policy last, so ties resolve as in second_price.
// Truthful: bid iff price <= value (kContinueAtValue) or price < value.
Mechanism ascending(const AuctionParams& params);

// Descending reverse clock for sellers with private costs. At each offer an
// active seller quits (keeps the good, payoff 0) or continues; continuing
// hands the move to the auctioneer (a chance node) who either buys at the
// current offer or lowers it. After the last offer the auctioneer buys or
// closes without a sale. Truthful: continue iff offer >= cost
// (kContinueAtValue) or offer > cost.
Mechanism reverse_clock(const AuctionParams& params);

// Serial dictatorship over sealed rank-order lists. Types are all strict
// preferences over the goods. `priority` lists agents (0-based) in picking
// order; empty means identity. With `random_order` a chance node after the
// lists draws the order uniformly.
Mechanism static_rp(int agents, int goods, std::vector<int> priority = {}, bool random_order = false);

// Agents approached one by one in priority order, each picking a remaining
// good. With `random_order` a root chance node draws the order uniformly.
Mechanism dynamic_rp(int agents, int goods, std::vector<int> priority = {}, bool random_order = false);

// Simultaneous offers s (seller) and b (buyer); trade iff s <= b at price
// alpha*s + (1-alpha)*b. Truthful maps exist only for the side with a
// dominant strategy: the buyer when alpha == 1, the seller when alpha == 0.
Mechanism double_auction(const TradeParams& params);

// Agent -> good (0-based).
using Allocation = std::vector<int>;
// Goods, most preferred first.
using Preference = std::vector<int>;

// True iff no other assignment of distinct goods makes some agent strictly
// better off and nobody worse off.
bool is_pareto_efficient(const Allocation& allocation, const std::vector<Preference>& prefs, int goods);

// Decodes an allocation outcome label produced by the RP constructors.
std::optional<Allocation> parse_allocation(const std::string& label);

}  // namespace mechsimp

#endif  // MECHSIMP_MECHANISM_HPP
