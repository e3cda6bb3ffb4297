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

#include "mechsimp/report.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "mechsimp/dominance.hpp"
#include "mechsimp/error.hpp"

namespace mechsimp {
namespace {

using nlohmann::json;

AuctionParams bidders(int hi) {
  AuctionParams p;
  p.bidders = 2;
  p.values = arithmetic_grid(Rational(0), Rational(hi));
  return p;
}

Mechanism trade(const Rational& alpha) {
  TradeParams p;
  p.prices = arithmetic_grid(Rational(0), Rational(3));
  p.costs = arithmetic_grid(Rational(1, 2), Rational(7, 2));
  p.values = p.costs;
  p.alpha = alpha;
  return double_auction(p);
}

GameDoc doc_of(Mechanism m) {
  GameDoc d;
  d.mechanism = std::move(m);
  return d;
}

CheckResult check(const Mechanism& m, Criterion c, int coalition = 2) {
  CheckOptions o;
  o.criterion = c;
  o.coalition_size = coalition;
  return run_check(doc_of(m), o);
}

void expect_round_trip(const Mechanism& m, const Witness& w) {
  const std::string text = witness_to_json(m, w);
  const Witness back = witness_from_json(m, text);
  EXPECT_EQ(back, w) << text;
  EXPECT_EQ(witness_to_json(m, back), text);
  EXPECT_TRUE(replay(m, back)) << text;
}

TEST(Criterion, NamesRoundTrip) {
  for (auto c : {Criterion::kSP, Criterion::kOSP, Criterion::kWGSP, Criterion::kStrongOSP, Criterion::kOneStep,
                 Criterion::kFSimple, Criterion::kStrategic})
    EXPECT_EQ(parse_criterion(to_string(c)), c);
  EXPECT_EQ(parse_criterion("strong-osp"), Criterion::kStrongOSP);
  EXPECT_EQ(parse_criterion("one-step"), Criterion::kOneStep);
  EXPECT_FALSE(parse_criterion("simple"));
}

TEST(WitnessJson, EveryKindRoundTrips) {
  Mechanism lying = second_price(bidders(3));
  lying.types[0][2].truthful->actions[0] = 3;
  const std::vector<std::pair<Mechanism, Criterion>> cases = {
      {lying, Criterion::kSP},
      {trade(Rational(1, 2)), Criterion::kSP},
      {second_price(bidders(3)), Criterion::kOSP},
      {ascending(bidders(3)), Criterion::kStrongOSP},
      {trade(Rational(1, 2)), Criterion::kStrategic},
  };
  for (const auto& [m, c] : cases) {
    const CheckResult r = check(m, c);
    ASSERT_FALSE(r.holds) << m.name << " " << to_string(c);
    ASSERT_TRUE(r.verdict.witness);
    expect_round_trip(m, *r.verdict.witness);
  }
}

TEST(WitnessJson, CoalitionRoundTrips) {
  // Defecting is dominant for each player, cooperating together pays both more.
  Mechanism m;
  GameTree& t = m.tree;
  const int a = t.add_player("a");
  const int b = t.add_player("b");
  const int ga = t.add_infoset(a, "a.move", {"c", "d"});
  const int gb = t.add_infoset(b, "b.move", {"c", "d"});
  const int root = t.add_decision(ga);
  const char* labels[2][2] = {{"cc", "cd"}, {"dc", "dd"}};
  for (int x = 0; x < 2; ++x) {
    const int n = t.add_decision(gb);
    t.add_child(root, n);
    for (int y = 0; y < 2; ++y) t.add_child(n, t.add_terminal(t.add_outcome(labels[x][y])));
  }
  m.name = "dilemma";
  m.types = {{TypeSpec{"t", {Rational(2), Rational(0), Rational(3), Rational(1)}, PureStrategy{a, {1}}}},
             {TypeSpec{"t", {Rational(2), Rational(3), Rational(0), Rational(1)}, PureStrategy{b, {1}}}}};
  const CheckResult r = check(m, Criterion::kWGSP);
  ASSERT_FALSE(r.holds);
  expect_round_trip(m, *r.verdict.witness);
  EXPECT_EQ(json::parse(r.json)["witness"]["kind"], "coalition");
}

TEST(WitnessJson, RejectsForeignNames) {
  const Mechanism m = second_price(bidders(3));
  const CheckResult r = check(m, Criterion::kOSP);
  json w = json::parse(r.json)["witness"];
  EXPECT_NO_THROW(witness_from_json(m, w.dump()));

  json bad_set = w;
  bad_set["infoset"] = "bidder9.bid";
  EXPECT_THROW(witness_from_json(m, bad_set.dump()), MalformedStrategy);
  json bad_action = w;
  bad_action["deviation"]["actions"]["bidder1.bid"] = "bid:99";
  EXPECT_THROW(witness_from_json(m, bad_action.dump()), MalformedStrategy);
  json bad_kind = w;
  bad_kind["kind"] = "oracle";
  EXPECT_THROW(witness_from_json(m, bad_kind.dump()), MalformedStrategy);
  EXPECT_THROW(witness_from_json(m, "{"), MalformedStrategy);

  // A tampered bound parses but no longer replays.
  json tampered = w;
  tampered["best"] = "0";
  EXPECT_FALSE(replay(m, witness_from_json(m, tampered.dump())));
}

TEST(RunCheck, ReportFields) {
  const Mechanism m = ascending(bidders(3));
  const CheckResult r = check(m, Criterion::kOSP);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.json.find('\n'), std::string::npos);
  const json j = json::parse(r.json);
  EXPECT_EQ(j["criterion"], "osp");
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["mechanism"]["name"], "ascending");
  EXPECT_EQ(j["mechanism"]["players"], (json{"bidder1", "bidder2"}));
  EXPECT_EQ(j["mechanism"]["params"]["values"], "0,1,2,3");
  EXPECT_TRUE(j.contains("wall_ms"));
  EXPECT_GT(j["certificate"]["evaluations"].get<std::uint64_t>(), 0u);
  EXPECT_TRUE(j["witness"].is_null());
}

TEST(RunCheck, FailingReportCarriesSummary) {
  const CheckResult r = check(second_price(bidders(4)), Criterion::kOSP);
  EXPECT_FALSE(r.holds);
  const json j = json::parse(r.json);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"]["kind"], "bounds");
  EXPECT_FALSE(j["witness"]["summary"].get<std::string>().empty());
}

TEST(RunCheck, OptionsAreEchoed) {
  const json wgsp = json::parse(check(ascending(bidders(2)), Criterion::kWGSP, 1).json);
  EXPECT_EQ(wgsp["options"]["coalition_size"], 1);

  CheckOptions o;
  o.criterion = Criterion::kFSimple;
  o.foresight = ForesightSpec(ForesightPreset::kOneStep);
  const json fs = json::parse(run_check(doc_of(ascending(bidders(2))), o).json);
  EXPECT_EQ(fs["options"]["foresight"], "one-step");
  EXPECT_EQ(fs["holds"], true);

  const json strategic = json::parse(check(trade(Rational(1)), Criterion::kStrategic).json);
  EXPECT_EQ(strategic["qualifier"], "holds on supplied family");
  EXPECT_EQ(strategic["options"]["beliefs"], "builtin");
  EXPECT_FALSE(strategic["certificate"]["robust"].empty());
}

TEST(RunCheck, FSimpleFallsBackToTheDocumentTable) {
  const Mechanism m = ascending(bidders(3));
  GameDoc d = doc_of(m);
  std::map<int, std::vector<int>> table;
  const ForesightSpec one(ForesightPreset::kOneStep);
  for (int g = 0; g < m.tree.num_infosets(); ++g) table[g] = one.family(m.tree, g);
  d.foresight = ForesightSpec::custom(table);
  CheckOptions o;
  o.criterion = Criterion::kFSimple;
  const CheckResult r = run_check(d, o);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(json::parse(r.json)["options"]["foresight"], "custom");
}

TEST(RunCheck, ErrorsPropagate) {
  CheckOptions o;
  o.criterion = Criterion::kSP;
  o.budget = 2;
  EXPECT_THROW(run_check(doc_of(second_price(bidders(4))), o), BudgetExceeded);
  o.budget = 0;
  o.criterion = Criterion::kOSP;
  EXPECT_THROW(run_check(doc_of(trade(Rational(1, 2))), o), Unsupported);
}

}  // namespace
}  // namespace mechsimp
