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

#include "mechsimp/foresight.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "mechsimp/dominance.hpp"
#include "mechsimp/error.hpp"
#include "oracle.hpp"

namespace mechsimp {
namespace {

AuctionParams two_bidders(int hi) {
  AuctionParams p;
  p.bidders = 2;
  p.values = arithmetic_grid(Rational(0), Rational(hi));
  return p;
}

// First information set of `player` whose name ends in "@price".
int asked_at(const GameTree& t, int player, int price) {
  const std::string suffix = "@" + std::to_string(price);
  for (int g : t.player_infosets(player)) {
    const std::string& name = t.infoset(g).name;
    if (name.size() > suffix.size() && name.ends_with(suffix)) return g;
  }
  ADD_FAILURE() << "no information set at price " << price;
  return -1;
}

int price_of(const GameTree& t, int g) {
  const std::string& name = t.infoset(g).name;
  return std::stoi(name.substr(name.find('@') + 1));
}

// Plan on F(anchor) choosing `pick(infoset)` by action label.
PartialPlan plan_on(const GameTree& t, int anchor, const ForesightSpec& spec,
                    const std::function<std::string(int)>& pick) {
  const int player = t.infoset(anchor).player;
  PartialPlan plan{player, anchor, std::vector<int>(t.player_infosets(player).size(), -1)};
  for (int g : spec.family(t, anchor)) {
    const InfoSet& info = t.infoset(g);
    const std::string label = pick(g);
    for (int a = 0; a < static_cast<int>(info.actions.size()); ++a)
      if (info.actions[a] == label) plan.actions[info.local] = a;
  }
  return plan;
}

testing::Family family_of(const GameTree& t, const ForesightSpec& spec) {
  return [&t, spec](int g) { return spec.family(t, g); };
}

TEST(OneStepAhead, DynamicPriorityHasNoLaterOwnMoves) {
  const Mechanism m = dynamic_rp(3, 3);
  for (int p = 0; p < m.num_players(); ++p)
    for (int g : m.tree.player_infosets(p)) EXPECT_TRUE(one_step_ahead(m.tree, p, g).empty());
}

TEST(OneStepAhead, AscendingLooksAtTheNextAsk) {
  const Mechanism m = ascending(two_bidders(4));
  const int top = 4;
  for (int p = 0; p < 2; ++p) {
    for (int g : m.tree.player_infosets(p)) {
      const auto next = one_step_ahead(m.tree, p, g);
      EXPECT_EQ(next, testing::oracle_one_step(m.tree, g));
      if (price_of(m.tree, g) == top) {
        EXPECT_TRUE(next.empty()) << m.tree.infoset(g).name;
        continue;
      }
      for (int h : next) {
        EXPECT_EQ(m.tree.infoset(h).player, p);
        EXPECT_EQ(price_of(m.tree, h), price_of(m.tree, g) + 1) << m.tree.infoset(h).name;
      }
    }
  }
}

TEST(OneStepAhead, SealedBidIsASingleMove) {
  const Mechanism m = second_price(two_bidders(3));
  const int g = *m.tree.find_infoset("bidder1.bid");
  EXPECT_TRUE(one_step_ahead(m.tree, 0, g).empty());
}

TEST(ForesightSpec, PresetFamiliesContainTheAnchor) {
  const Mechanism m = ascending(two_bidders(3));
  for (auto preset : {ForesightPreset::kFull, ForesightPreset::kSelf, ForesightPreset::kOneStep}) {
    const ForesightSpec spec(preset);
    for (int g = 0; g < m.tree.num_infosets(); ++g) {
      const auto f = spec.family(m.tree, g);
      EXPECT_TRUE(std::find(f.begin(), f.end(), g) != f.end());
      EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
    }
  }
  const int g = asked_at(m.tree, 0, 1);
  EXPECT_EQ(ForesightSpec(ForesightPreset::kSelf).family(m.tree, g), std::vector<int>{g});
  EXPECT_EQ(ForesightSpec(ForesightPreset::kFull).family(m.tree, g).size(), m.tree.player_infosets(0).size());
}

TEST(ForesightSpec, PresetNames) {
  for (auto preset : {ForesightPreset::kFull, ForesightPreset::kSelf, ForesightPreset::kOneStep})
    EXPECT_EQ(parse_preset(to_string(preset)), preset);
  EXPECT_FALSE(parse_preset("two-step"));
}

TEST(ForesightSpec, CustomTablesAreValidated) {
  const Mechanism m = ascending(two_bidders(3));
  const int mine = asked_at(m.tree, 0, 1);
  const int later = asked_at(m.tree, 0, 2);
  const int theirs = asked_at(m.tree, 1, 1);
  EXPECT_TRUE(validate(m.tree, ForesightSpec::custom({{mine, {mine, later}}})).empty());
  EXPECT_EQ(validate(m.tree, ForesightSpec::custom({{mine, {later}}})).size(), 1u);
  EXPECT_EQ(validate(m.tree, ForesightSpec::custom({{mine, {mine, theirs}}})).size(), 1u);
  EXPECT_FALSE(validate(m.tree, ForesightSpec::custom({{999, {999}}})).empty());
  Budget b;
  EXPECT_THROW(is_f_simple(m, ForesightSpec::custom({{mine, {later}}}), b), MalformedStrategy);
  // Anchors missing from the table foresee only themselves.
  const ForesightSpec sparse = ForesightSpec::custom({{mine, {mine, later}}});
  EXPECT_EQ(sparse.family(m.tree, later), std::vector<int>{later});
}

TEST(FDominant, ContinueNowQuitNextIsOneStepDominant) {
  const Mechanism m = ascending(two_bidders(5));
  const auto& v4 = m.types[0][4];
  const ForesightSpec spec(ForesightPreset::kOneStep);
  const int g = asked_at(m.tree, 0, 1);
  const PartialPlan plan = plan_on(m.tree, g, spec, [&](int h) { return h == g ? "bid" : "quit"; });
  EXPECT_TRUE(f_dominant(m.tree, 0, v4.utility, plan, spec));
}

TEST(FDominant, QuittingAboveValueIsDominantUnderAnyForesight) {
  const Mechanism m = ascending(two_bidders(5));
  const auto& v4 = m.types[0][4];
  const int g = asked_at(m.tree, 0, 5);
  for (auto preset : {ForesightPreset::kFull, ForesightPreset::kSelf, ForesightPreset::kOneStep}) {
    const ForesightSpec spec(preset);
    const PartialPlan plan = plan_on(m.tree, g, spec, [](int) { return "quit"; });
    EXPECT_TRUE(f_dominant(m.tree, 0, v4.utility, plan, spec)) << to_string(preset);
  }
}

TEST(FDominant, ContinuingWithoutForesightIsNotDominant) {
  const Mechanism m = ascending(two_bidders(5));
  const auto& v4 = m.types[0][4];
  const ForesightSpec spec(ForesightPreset::kSelf);
  const int g = asked_at(m.tree, 0, 1);
  const PartialPlan plan = plan_on(m.tree, g, spec, [](int) { return "bid"; });
  EXPECT_FALSE(f_dominant(m.tree, 0, v4.utility, plan, spec));
}

TEST(FDominant, FullForesightAgreesWithObviousDominance) {
  const Mechanism m = ascending(two_bidders(4));
  const ForesightSpec full(ForesightPreset::kFull);
  for (const auto& type : m.types[0]) {
    for (int g : m.tree.player_infosets(0)) {
      PartialPlan plan = PartialPlan::from(*type.truthful);
      plan.anchor = g;
      EXPECT_TRUE(f_dominant(m.tree, 0, type.utility, plan, full)) << type.name << " " << m.tree.infoset(g).name;
    }
  }
}

TEST(FDominant, RejectsForeignAnchors) {
  const Mechanism m = ascending(two_bidders(3));
  PartialPlan plan = PartialPlan::from(*m.types[0][1].truthful);
  EXPECT_THROW(f_dominant(m.tree, 0, m.types[0][1].utility, plan, ForesightSpec()), MalformedStrategy);
  plan.anchor = asked_at(m.tree, 1, 1);
  EXPECT_THROW(f_dominant(m.tree, 0, m.types[0][1].utility, plan, ForesightSpec()), MalformedStrategy);
}

TEST(FSimple, Classification) {
  Budget b;
  const Mechanism asc = ascending(two_bidders(3));
  EXPECT_TRUE(one_step_simple(asc, b).holds);
  EXPECT_TRUE(is_f_simple(asc, ForesightSpec(ForesightPreset::kFull), b).holds);
  EXPECT_FALSE(strong_osp(asc, b).holds);
  EXPECT_TRUE(strong_osp(dynamic_rp(3, 3), b).holds);
  EXPECT_FALSE(one_step_simple(second_price(two_bidders(3)), b).holds);
  EXPECT_FALSE(strong_osp(static_rp(3, 3), b).holds);
}

TEST(FSimple, AgreesWithOracleOnNamedMechanisms) {
  const std::vector<Mechanism> mechs = {ascending(two_bidders(3)), second_price(two_bidders(2)), dynamic_rp(2, 3),
                                        static_rp(2, 2)};
  for (const Mechanism& m : mechs) {
    for (auto preset : {ForesightPreset::kFull, ForesightPreset::kSelf, ForesightPreset::kOneStep}) {
      const ForesightSpec spec(preset);
      Budget b;
      EXPECT_EQ(is_f_simple(m, spec, b).holds, testing::oracle_f_simple(m, family_of(m.tree, spec)))
          << m.name << " " << to_string(preset);
    }
  }
}

TEST(FSimple, FullForesightMatchesOsp) {
  for (const Mechanism& m : {ascending(two_bidders(3)), second_price(two_bidders(3)), dynamic_rp(3, 3)}) {
    Budget b;
    EXPECT_EQ(is_f_simple(m, ForesightSpec(ForesightPreset::kFull), b).holds, is_osp(m, b).holds) << m.name;
  }
}

TEST(FSimple, WitnessNamesAReachableTruthfulAnchor) {
  const Mechanism m = ascending(two_bidders(3));
  Budget b;
  const Verdict v = strong_osp(m, b);
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  const auto& w = std::get<BoundsWitness>(*v.witness);
  const auto& type = m.types[w.player][w.type];
  const InfoSet& g = m.tree.infoset(w.infoset);
  EXPECT_EQ(g.player, w.player);
  // Truthful play bids at the anchor, and an own later move could still lose money.
  EXPECT_EQ(g.actions[type.truthful->actions[g.local]], "bid");
  EXPECT_LT(w.worst, w.best);
  EXPECT_TRUE(replay(m, *v.witness));
}

TEST(FSimple, CustomTableReproducesOneStep) {
  const Mechanism m = ascending(two_bidders(3));
  std::map<int, std::vector<int>> table;
  const ForesightSpec one(ForesightPreset::kOneStep);
  for (int g = 0; g < m.tree.num_infosets(); ++g) table[g] = one.family(m.tree, g);
  Budget b;
  EXPECT_TRUE(is_f_simple(m, ForesightSpec::custom(table), b).holds);
  // Dropping the foresight at a single anchor in the middle of the clock breaks it.
  const int g = asked_at(m.tree, 0, 1);
  table[g] = {g};
  EXPECT_FALSE(is_f_simple(m, ForesightSpec::custom(table), b).holds);
}

TEST(FSimple, TruthNowQuitNextIsOneStepDominantEverywhere) {
  const Mechanism m = ascending(two_bidders(4));
  const ForesightSpec spec(ForesightPreset::kOneStep);
  for (int p = 0; p < 2; ++p) {
    for (const auto& type : m.types[p]) {
      for (int g : m.tree.player_infosets(p)) {
        const InfoSet& info = m.tree.infoset(g);
        const std::string now = info.actions[type.truthful->actions[info.local]];
        const PartialPlan plan = plan_on(m.tree, g, spec, [&](int h) { return h == g ? now : "quit"; });
        EXPECT_TRUE(f_dominant(m.tree, p, type.utility, plan, spec)) << type.name << " " << info.name;
        // Bidding again at the next ask leaves later own moves free, so the
        // truthful restriction alone is not enough there unless no price
        // on the clock exceeds the value.
        PartialPlan truthful = PartialPlan::from(*type.truthful);
        truthful.anchor = g;
        const int value = static_cast<int>(type.name[1] - '0');
        const bool bids_next = price_of(m.tree, g) + 1 <= value && value < 4;
        EXPECT_EQ(f_dominant(m.tree, p, type.utility, truthful, spec), !bids_next) << type.name << " " << info.name;
      }
    }
  }
}

TEST(FSimple, RequiresTruthfulMaps) {
  TradeParams p;
  p.prices = arithmetic_grid(Rational(0), Rational(3));
  p.costs = arithmetic_grid(Rational(1, 2), Rational(7, 2));
  p.values = p.costs;
  p.alpha = Rational(1, 2);
  Budget b;
  EXPECT_THROW(strong_osp(double_auction(p), b), Unsupported);
}

}  // namespace
}  // namespace mechsimp
