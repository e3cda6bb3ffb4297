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

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "mechsimp/error.hpp"
#include "mechsimp/mechanism.hpp"

namespace mechsimp {

namespace {

constexpr int kMaxGoods = 4;

void check_grid(const std::string& what, const std::vector<Rational>& grid) {
  if (grid.empty()) throw ConstructionError(what + " grid is empty");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k - 1] < grid[k])) throw ConstructionError(what + " grid must be sorted and duplicate-free");
}

std::string grid_str(const std::vector<Rational>& grid) {
  std::string out;
  for (std::size_t k = 0; k < grid.size(); ++k) out += (k ? "," : "") + grid[k].str();
  return out;
}

template <typename Seq, typename Fn>
std::string join(const Seq& seq, const std::string& sep, Fn&& fn) {
  std::string out;
  bool first = true;
  for (const auto& x : seq) {
    if (!first) out += sep;
    out += fn(x);
    first = false;
  }
  return out;
}

std::string one_based(int i) { return std::to_string(i + 1); }

Utility make_utility(const GameTree& tree, const std::function<Rational(int)>& payoff) {
  Utility u(tree.num_outcomes());
  for (int o = 0; o < tree.num_outcomes(); ++o) u[o] = payoff(o);
  return u;
}

std::vector<int> check_order(std::vector<int> order, int n, const std::string& what) {
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (static_cast<int>(sorted.size()) != n || sorted[k] != k)
      throw ConstructionError(what + " must be a permutation of the participants");
  return order;
}

std::vector<std::vector<int>> permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string pref_label(const std::vector<int>& goods) { return join(goods, ">", one_based); }

std::string allocation_label(const Allocation& a) { return "alloc:" + join(a, "-", one_based); }

Allocation serial_dictatorship(const std::vector<std::vector<int>>& lists, const std::vector<int>& order, int goods) {
  Allocation alloc(lists.size(), -1);
  std::vector<char> taken(goods, 0);
  for (int agent : order) {
    for (int g : lists[agent]) {
      if (!taken[g]) {
        taken[g] = 1;
        alloc[agent] = g;
        break;
      }
    }
  }
  return alloc;
}

void check_rp_size(int agents, int goods) {
  if (agents < 1 || goods < agents || goods > kMaxGoods)
    throw ConstructionError("random priority needs 1 <= agents <= goods <= " + std::to_string(kMaxGoods));
}

void add_rp_types(Mechanism& m, int agents, int goods, const std::vector<Allocation>& allocs,
                  const std::function<PureStrategy(int agent, const std::vector<int>& pref)>& truthful) {
  const auto prefs = permutations(goods);
  m.types.assign(agents, {});
  for (int i = 0; i < agents; ++i) {
    for (const auto& pref : prefs) {
      std::vector<int> rank(goods);
      for (int r = 0; r < goods; ++r) rank[pref[r]] = r;
      TypeSpec t;
      t.name = "pref:" + pref_label(pref);
      t.utility = make_utility(m.tree, [&](int o) { return Rational(goods - rank[allocs[o][i]]); });
      t.truthful = truthful(i, pref);
      m.types[i].push_back(std::move(t));
    }
  }
}

}  // namespace

bool Mechanism::has_truthful(int player) const {
  for (const TypeSpec& t : types.at(player))
    if (!t.truthful) return false;
  return true;
}

bool Mechanism::has_truthful() const {
  for (int p = 0; p < num_players(); ++p)
    if (!has_truthful(p)) return false;
  return true;
}

std::vector<Violation> validate(const Mechanism& mech) {
  std::vector<Violation> out = validate(mech.tree);
  const GameTree& tree = mech.tree;
  if (static_cast<int>(mech.types.size()) != tree.num_players()) {
    out.push_back({"mechanism", "type spaces do not match the player count"});
    return out;
  }
  for (int p = 0; p < tree.num_players(); ++p) {
    if (mech.types[p].empty()) out.push_back({"player " + tree.player_name(p), "empty type space"});
    for (const TypeSpec& t : mech.types[p]) {
      const std::string where = "type " + tree.player_name(p) + "/" + t.name;
      if (static_cast<int>(t.utility.size()) != tree.num_outcomes())
        out.push_back({where, "utility is not total on the outcomes"});
      if (!t.truthful) continue;
      const auto& own = tree.player_infosets(p);
      bool ok = t.truthful->player == p && t.truthful->actions.size() == own.size();
      for (std::size_t k = 0; ok && k < own.size(); ++k) {
        const int a = t.truthful->actions[k];
        ok = a >= 0 && a < static_cast<int>(tree.infoset(own[k]).actions.size());
      }
      if (!ok) out.push_back({where, "truthful strategy is not a legal pure strategy"});
    }
  }
  return out;
}

std::vector<Rational> arithmetic_grid(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step.sign() <= 0) throw ConstructionError("grid step must be positive");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

Mechanism second_price(const AuctionParams& params) {
  const int n = params.bidders;
  if (n < 1) throw ConstructionError("need at least one bidder");
  check_grid("value", params.values);
  const std::vector<Rational> bids = params.prices.empty() ? params.values : params.prices;
  check_grid("bid", bids);

  Mechanism m;
  m.name = "second-price";
  m.params = {{"bidders", std::to_string(n)},
              {"values", grid_str(params.values)},
              {"bids", grid_str(bids)},
              {"tie", params.tie == TiePolicy::kLowestIndex ? "lowest" : "highest"}};
  GameTree& t = m.tree;
  std::vector<std::string> actions;
  for (const Rational& b : bids) actions.push_back("bid:" + b.str());
  std::vector<int> infosets;
  for (int i = 0; i < n; ++i) {
    t.add_player("bidder" + one_based(i));
    infosets.push_back(t.add_infoset(i, "bidder" + one_based(i) + ".bid", actions));
  }

  std::vector<std::pair<int, Rational>> info;  // outcome -> (winner, price)
  std::vector<int> chosen(n);
  std::function<int(int)> build = [&](int i) -> int {
    if (i == n) {
      int winner = 0;
      for (int j = 1; j < n; ++j) {
        const bool better = params.tie == TiePolicy::kLowestIndex ? chosen[j] > chosen[winner]
                                                                   : chosen[j] >= chosen[winner];
        if (better) winner = j;
      }
      Rational price = bids.front();
      bool any = false;
      for (int j = 0; j < n; ++j) {
        if (j == winner) continue;
        if (!any || bids[chosen[j]] > price) price = bids[chosen[j]];
        any = true;
      }
      const int o = t.add_outcome("win" + one_based(winner) + "@" + price.str());
      if (o == static_cast<int>(info.size())) info.emplace_back(winner, price);
      return t.add_terminal(o);
    }
    const int id = t.add_decision(infosets[i]);
    for (int k = 0; k < static_cast<int>(bids.size()); ++k) {
      chosen[i] = k;
      t.add_child(id, build(i + 1));
    }
    return id;
  };
  build(0);

  m.types.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (const Rational& v : params.values) {
      const auto it = std::find(bids.begin(), bids.end(), v);
      if (it == bids.end()) throw ConstructionError("value " + v.str() + " is not on the bid grid");
      TypeSpec ts;
      ts.name = "v" + v.str();
      ts.utility = make_utility(t, [&](int o) { return info[o].first == i ? v - info[o].second : Rational(0); });
      ts.truthful = PureStrategy{i, {static_cast<int>(it - bids.begin())}};
      m.types[i].push_back(std::move(ts));
    }
  }
  return m;
}

Mechanism ascending(const AuctionParams& params) {
  const int n = params.bidders;
  if (n < 1 || n > 16) throw ConstructionError("ascending clock needs 1..16 bidders");
  check_grid("value", params.values);
  const std::vector<Rational> ladder = params.prices.empty() ? params.values : params.prices;
  check_grid("price", ladder);
  if (params.step) {
    if (params.step->sign() <= 0) throw ConstructionError("clock step must be positive");
    for (std::size_t k = 1; k < ladder.size(); ++k)
      if (ladder[k] - ladder[k - 1] != *params.step)
        throw ConstructionError("price grid does not advance by the clock step " + params.step->str());
  }
  std::vector<int> order = params.order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    if (params.tie == TiePolicy::kLowestIndex) std::reverse(order.begin(), order.end());
  }
  order = check_order(order, n, "asking order");

  Mechanism m;
  m.name = "ascending";
  m.params = {{"bidders", std::to_string(n)},
              {"values", grid_str(params.values)},
              {"prices", grid_str(ladder)},
              {"order", join(order, ",", one_based)},
              {"tie", params.tie == TiePolicy::kLowestIndex ? "lowest" : "highest"},
              {"boundary", params.boundary == ClockBoundary::kContinueAtValue ? "continue" : "quit"}};
  if (params.step) m.params.emplace_back("step", params.step->str());
  GameTree& t = m.tree;
  for (int i = 0; i < n; ++i) t.add_player("bidder" + one_based(i));

  const int rungs = static_cast<int>(ladder.size());
  std::vector<int> infoset_rung;
  std::vector<int> asks(n, 0);
  std::vector<std::pair<int, Rational>> info;

  auto terminal = [&](int winner, const Rational& price) {
    const int o = t.add_outcome("win" + one_based(winner) + "@" + price.str());
    if (o == static_cast<int>(info.size())) info.emplace_back(winner, price);
    return t.add_terminal(o);
  };

  std::function<int(int, int, unsigned, std::vector<int>)> build = [&](int rung, int pos, unsigned active,
                                                                       std::vector<int> last) -> int {
    if (std::popcount(active) == 1) {
      const int w = std::countr_zero(active);
      return terminal(w, last[w] >= 0 ? ladder[last[w]] : ladder.front());
    }
    while (pos < n && !(active & (1u << order[pos]))) ++pos;
    if (pos == n) {
      if (rung + 1 < rungs) return build(rung + 1, 0, active, last);
      int w = -1;
      for (int i = 0; i < n; ++i)
        if (active & (1u << i)) w = (params.tie == TiePolicy::kLowestIndex && w >= 0) ? w : i;
      return terminal(w, ladder[rung]);
    }
    const int i = order[pos];
    const int info_id = t.add_infoset(i, "bidder" + one_based(i) + "." + std::to_string(asks[i]++) + "@" +
                                             ladder[rung].str(),
                                       {"bid", "quit"});
    infoset_rung.resize(info_id + 1, -1);
    infoset_rung[info_id] = rung;
    const int id = t.add_decision(info_id);
    std::vector<int> bid = last;
    bid[i] = rung;
    t.add_child(id, build(rung, pos + 1, active, bid));
    t.add_child(id, build(rung, pos + 1, active & ~(1u << i), last));
    return id;
  };
  build(0, 0, (n >= 32 ? ~0u : (1u << n) - 1), std::vector<int>(n, -1));

  m.types.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (const Rational& v : params.values) {
      TypeSpec ts;
      ts.name = "v" + v.str();
      ts.utility = make_utility(t, [&](int o) { return info[o].first == i ? v - info[o].second : Rational(0); });
      PureStrategy s{i, {}};
      for (int g : t.player_infosets(i)) {
        const Rational& price = ladder[infoset_rung[g]];
        const bool stay = params.boundary == ClockBoundary::kContinueAtValue ? price <= v : price < v;
        s.actions.push_back(stay ? 0 : 1);
      }
      ts.truthful = std::move(s);
      m.types[i].push_back(std::move(ts));
    }
  }
  return m;
}

Mechanism reverse_clock(const AuctionParams& params) {
  const int n = params.bidders;
  if (n < 1 || n > 4) throw ConstructionError("reverse clock needs 1..4 sellers");
  check_grid("cost", params.values);
  std::vector<Rational> ladder = params.prices.empty() ? params.values : params.prices;
  check_grid("price", ladder);
  if (params.step) {
    if (params.step->sign() <= 0) throw ConstructionError("clock step must be positive");
    for (std::size_t k = 1; k < ladder.size(); ++k)
      if (ladder[k] - ladder[k - 1] != *params.step)
        throw ConstructionError("price grid does not advance by the clock step " + params.step->str());
  }
  std::reverse(ladder.begin(), ladder.end());
  const std::vector<int> order = check_order(params.order, n, "asking order");

  Mechanism m;
  m.name = "reverse-clock";
  m.params = {{"sellers", std::to_string(n)},
              {"costs", grid_str(params.values)},
              {"prices", grid_str(params.prices.empty() ? params.values : params.prices)},
              {"order", join(order, ",", one_based)},
              {"boundary", params.boundary == ClockBoundary::kContinueAtValue ? "continue" : "quit"}};
  if (params.step) m.params.emplace_back("step", params.step->str());
  GameTree& t = m.tree;
  for (int i = 0; i < n; ++i) t.add_player("seller" + one_based(i));

  constexpr int kActive = -2;
  constexpr int kKept = -1;
  const int rungs = static_cast<int>(ladder.size());
  const Rational half(1, 2);
  std::vector<int> infoset_rung;
  std::vector<int> asks(n, 0);
  std::vector<std::vector<int>> info;  // outcome -> per-seller status

  std::function<int(int, int, std::vector<int>)> build = [&](int rung, int pos, std::vector<int> status) -> int {
    while (pos < n && status[order[pos]] != kActive) ++pos;
    if (pos == n) {
      const bool any = std::find(status.begin(), status.end(), kActive) != status.end();
      if (any && rung + 1 < rungs) return build(rung + 1, 0, status);
      std::string label;
      for (int i = 0; i < n; ++i) {
        label += (i ? "|" : "") + std::string("s") + one_based(i) + ":";
        label += status[i] >= 0 ? "sold@" + ladder[status[i]].str() : std::string("kept");
      }
      const int o = t.add_outcome(label);
      if (o == static_cast<int>(info.size())) info.push_back(status);
      return t.add_terminal(o);
    }
    const int i = order[pos];
    const int info_id = t.add_infoset(
        i, "seller" + one_based(i) + "." + std::to_string(asks[i]++) + "@" + ladder[rung].str(), {"continue", "quit"});
    infoset_rung.resize(info_id + 1, -1);
    infoset_rung[info_id] = rung;
    const int id = t.add_decision(info_id);
    const bool last_offer = rung + 1 == rungs;
    const int chance = t.add_chance({"sell", last_offer ? "close" : "lower"}, {half, half});
    t.add_child(id, chance);
    std::vector<int> sold = status;
    sold[i] = rung;
    t.add_child(chance, build(rung, pos + 1, sold));
    std::vector<int> later = status;
    if (last_offer) later[i] = kKept;
    t.add_child(chance, build(rung, pos + 1, later));
    std::vector<int> kept = status;
    kept[i] = kKept;
    t.add_child(id, build(rung, pos + 1, kept));
    return id;
  };
  build(0, 0, std::vector<int>(n, kActive));

  m.types.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (const Rational& c : params.values) {
      TypeSpec ts;
      ts.name = "c" + c.str();
      ts.utility = make_utility(t, [&](int o) { return info[o][i] >= 0 ? ladder[info[o][i]] - c : Rational(0); });
      PureStrategy s{i, {}};
      for (int g : t.player_infosets(i)) {
        const Rational& offer = ladder[infoset_rung[g]];
        const bool stay = params.boundary == ClockBoundary::kContinueAtValue ? offer >= c : offer > c;
        s.actions.push_back(stay ? 0 : 1);
      }
      ts.truthful = std::move(s);
      m.types[i].push_back(std::move(ts));
    }
  }
  return m;
}

Mechanism static_rp(int agents, int goods, std::vector<int> priority, bool random_order) {
  check_rp_size(agents, goods);
  priority = check_order(std::move(priority), agents, "priority order");

  Mechanism m;
  m.name = "static-rp";
  m.params = {{"agents", std::to_string(agents)}, {"goods", std::to_string(goods)}};
  if (random_order)
    m.params.emplace_back("random-order", "true");
  else
    m.params.emplace_back("priority", join(priority, ",", one_based));
  GameTree& t = m.tree;

  const auto lists = permutations(goods);
  std::vector<std::string> actions;
  for (const auto& l : lists) actions.push_back("rank:" + pref_label(l));
  std::vector<int> infosets;
  for (int i = 0; i < agents; ++i) {
    t.add_player("agent" + one_based(i));
    infosets.push_back(t.add_infoset(i, "agent" + one_based(i) + ".list", actions));
  }
  const auto orders = permutations(agents);

  std::vector<Allocation> allocs;
  auto terminal = [&](const Allocation& a) {
    const int o = t.add_outcome(allocation_label(a));
    if (o == static_cast<int>(allocs.size())) allocs.push_back(a);
    return t.add_terminal(o);
  };
  std::vector<std::vector<int>> submitted(agents);
  std::function<int(int)> build = [&](int i) -> int {
    if (i == agents) {
      if (!random_order) return terminal(serial_dictatorship(submitted, priority, goods));
      std::vector<std::string> labels;
      for (const auto& o : orders) labels.push_back("order:" + join(o, "-", one_based));
      const int chance =
          t.add_chance(labels, std::vector<Rational>(orders.size(), Rational(1, static_cast<int>(orders.size()))));
      for (const auto& o : orders) t.add_child(chance, terminal(serial_dictatorship(submitted, o, goods)));
      return chance;
    }
    const int id = t.add_decision(infosets[i]);
    for (const auto& l : lists) {
      submitted[i] = l;
      t.add_child(id, build(i + 1));
    }
    return id;
  };
  build(0);

  add_rp_types(m, agents, goods, allocs, [&](int agent, const std::vector<int>& pref) {
    const int k = static_cast<int>(std::find(lists.begin(), lists.end(), pref) - lists.begin());
    return PureStrategy{agent, {k}};
  });
  return m;
}

Mechanism dynamic_rp(int agents, int goods, std::vector<int> priority, bool random_order) {
  check_rp_size(agents, goods);
  priority = check_order(std::move(priority), agents, "priority order");

  Mechanism m;
  m.name = "dynamic-rp";
  m.params = {{"agents", std::to_string(agents)}, {"goods", std::to_string(goods)}};
  if (random_order)
    m.params.emplace_back("random-order", "true");
  else
    m.params.emplace_back("priority", join(priority, ",", one_based));
  GameTree& t = m.tree;
  for (int i = 0; i < agents; ++i) t.add_player("agent" + one_based(i));

  std::vector<Allocation> allocs;
  std::vector<std::vector<int>> infoset_goods;  // remaining goods offered at each information set
  std::vector<int> asks(agents, 0);
  std::function<int(const std::vector<int>&, int, unsigned, Allocation)> build =
      [&](const std::vector<int>& order, int step, unsigned taken, Allocation alloc) -> int {
    if (step == agents) {
      const int o = t.add_outcome(allocation_label(alloc));
      if (o == static_cast<int>(allocs.size())) allocs.push_back(alloc);
      return t.add_terminal(o);
    }
    const int a = order[step];
    std::vector<int> remaining;
    std::vector<std::string> actions;
    for (int g = 0; g < goods; ++g) {
      if (taken & (1u << g)) continue;
      remaining.push_back(g);
      actions.push_back("pick:" + one_based(g));
    }
    const int info_id = t.add_infoset(a, "agent" + one_based(a) + "." + std::to_string(asks[a]++), actions);
    infoset_goods.resize(info_id + 1);
    infoset_goods[info_id] = remaining;
    const int id = t.add_decision(info_id);
    for (int g : remaining) {
      Allocation next = alloc;
      next[a] = g;
      t.add_child(id, build(order, step + 1, taken | (1u << g), next));
    }
    return id;
  };
  if (random_order) {
    const auto orders = permutations(agents);
    std::vector<std::string> labels;
    for (const auto& o : orders) labels.push_back("order:" + join(o, "-", one_based));
    const int chance =
        t.add_chance(labels, std::vector<Rational>(orders.size(), Rational(1, static_cast<int>(orders.size()))));
    for (const auto& o : orders) t.add_child(chance, build(o, 0, 0u, Allocation(agents, -1)));
  } else {
    build(priority, 0, 0u, Allocation(agents, -1));
  }

  add_rp_types(m, agents, goods, allocs, [&](int agent, const std::vector<int>& pref) {
    PureStrategy s{agent, {}};
    for (int g : t.player_infosets(agent)) {
      const auto& offered = infoset_goods[g];
      for (int best : pref) {
        auto it = std::find(offered.begin(), offered.end(), best);
        if (it != offered.end()) {
          s.actions.push_back(static_cast<int>(it - offered.begin()));
          break;
        }
      }
    }
    return s;
  });
  return m;
}

Mechanism double_auction(const TradeParams& params) {
  if (params.alpha.sign() < 0 || params.alpha > Rational(1)) throw ConstructionError("alpha must lie in [0,1]");
  check_grid("price", params.prices);
  check_grid("cost", params.costs);
  check_grid("value", params.values);
  const Rational& alpha = params.alpha;

  Mechanism m;
  m.name = "double-auction";
  m.params = {{"alpha", alpha.str()},
              {"prices", grid_str(params.prices)},
              {"costs", grid_str(params.costs)},
              {"values", grid_str(params.values)}};
  GameTree& t = m.tree;
  const int seller = t.add_player("seller");
  const int buyer = t.add_player("buyer");
  std::vector<std::string> actions;
  for (const Rational& p : params.prices) actions.push_back("offer:" + p.str());
  const int seller_info = t.add_infoset(seller, "seller.offer", actions);
  const int buyer_info = t.add_infoset(buyer, "buyer.offer", actions);

  std::vector<std::optional<Rational>> info;  // outcome -> trade price
  const int root = t.add_decision(seller_info);
  for (const Rational& s : params.prices) {
    const int node = t.add_decision(buyer_info);
    t.add_child(root, node);
    for (const Rational& b : params.prices) {
      std::optional<Rational> price;
      if (s <= b) price = alpha * s + (Rational(1) - alpha) * b;
      const int o = t.add_outcome(price ? "trade@" + price->str() : std::string("notrade"));
      if (o == static_cast<int>(info.size())) info.push_back(price);
      t.add_child(node, t.add_terminal(o));
    }
  }

  const int k = static_cast<int>(params.prices.size());
  m.types.assign(2, {});
  for (const Rational& c : params.costs) {
    TypeSpec ts;
    ts.name = "c" + c.str();
    ts.utility = make_utility(t, [&](int o) { return info[o] ? *info[o] - c : Rational(0); });
    if (alpha.sign() == 0) {
      int a = k - 1;
      for (int j = 0; j < k; ++j)
        if (params.prices[j] >= c) {
          a = j;
          break;
        }
      ts.truthful = PureStrategy{seller, {a}};
    }
    m.types[seller].push_back(std::move(ts));
  }
  for (const Rational& v : params.values) {
    TypeSpec ts;
    ts.name = "v" + v.str();
    ts.utility = make_utility(t, [&](int o) { return info[o] ? v - *info[o] : Rational(0); });
    if (alpha == Rational(1)) {
      int a = 0;
      for (int j = 0; j < k; ++j)
        if (params.prices[j] <= v) a = j;
      ts.truthful = PureStrategy{buyer, {a}};
    }
    m.types[buyer].push_back(std::move(ts));
  }
  return m;
}

bool is_pareto_efficient(const Allocation& allocation, const std::vector<Preference>& prefs, int goods) {
  const int n = static_cast<int>(allocation.size());
  std::vector<std::vector<int>> rank(n, std::vector<int>(goods, goods));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < static_cast<int>(prefs[i].size()); ++r) rank[i][prefs[i][r]] = r;

  Allocation other(n, -1);
  std::vector<char> used(goods, 0);
  std::function<bool(int)> improvable = [&](int i) -> bool {
    if (i == n) {
      bool strict = false;
      for (int j = 0; j < n; ++j) {
        if (rank[j][other[j]] > rank[j][allocation[j]]) return false;
        if (rank[j][other[j]] < rank[j][allocation[j]]) strict = true;
      }
      return strict;
    }
    for (int g = 0; g < goods; ++g) {
      if (used[g]) continue;
      used[g] = 1;
      other[i] = g;
      const bool found = improvable(i + 1);
      used[g] = 0;
      if (found) return true;
    }
    return false;
  };
  return !improvable(0);
}

std::optional<Allocation> parse_allocation(const std::string& label) {
  const std::string prefix = "alloc:";
  if (label.rfind(prefix, 0) != 0) return std::nullopt;
  Allocation out;
  std::stringstream ss(label.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, '-')) {
    try {
      out.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace mechsimp
