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

#include <chrono>

#include <nlohmann/json.hpp>

#include "mechsimp/dominance.hpp"
#include "mechsimp/error.hpp"
#include "mechsimp/strategic.hpp"

namespace mechsimp {

namespace {

using nlohmann::json;

// Name-based encoding.
class Codec {
 public:
  explicit Codec(const Mechanism& mech) : mech_(mech), tree_(mech.tree) {}

  json player(int p) const { return tree_.player_name(p); }
  json type(int p, int t) const { return mech_.types.at(p).at(t).name; }
  json infoset(int g) const { return tree_.infoset(g).name; }
  static json rational(const Rational& r) { return r.str(); }

  json strategy(const PureStrategy& s) const {
    json out = json::object();
    const auto& own = tree_.player_infosets(s.player);
    for (std::size_t k = 0; k < own.size() && k < s.actions.size(); ++k) {
      const InfoSet& info = tree_.infoset(own[k]);
      out[info.name] = info.actions.at(s.actions[k]);
    }
    return out;
  }

  json plan(const PartialPlan& plan) const {
    json out{{"actions", json::object()}};
    if (plan.anchor >= 0) out["anchor"] = infoset(plan.anchor);
    const auto& own = tree_.player_infosets(plan.player);
    for (std::size_t k = 0; k < own.size() && k < plan.actions.size(); ++k) {
      if (plan.actions[k] < 0) continue;
      const InfoSet& info = tree_.infoset(own[k]);
      out["actions"][info.name] = info.actions.at(plan.actions[k]);
    }
    return out;
  }

  json free_set(int player, const std::vector<bool>& mask) const {
    json out = json::array();
    const auto& own = tree_.player_infosets(player);
    for (std::size_t k = 0; k < mask.size() && k < own.size(); ++k)
      if (mask[k]) out.push_back(infoset(own[k]));
    return out;
  }

  json belief(const FirstOrderBelief& b) const {
    json support = json::array();
    for (const BeliefPoint& pt : b.support) {
      json types = json::object();
      for (int q = 0; q < static_cast<int>(pt.types.size()); ++q)
        if (q != b.owner) types[tree_.player_name(q)] = mech_.types[q][pt.types[q]].name;
      support.push_back({{"weight", rational(pt.weight)}, {"types", types}});
    }
    return {{"owner", player(b.owner)}, {"name", b.name}, {"support", support}};
  }

  json encode(const DeviationWitness& w) const {
    json actions = json::object(), chance = json::object();
    for (const auto& [g, a] : w.others.infoset_actions) actions[tree_.infoset(g).name] = tree_.infoset(g).actions.at(a);
    for (const auto& [n, e] : w.others.chance) chance[std::to_string(n)] = e;
    return {{"kind", "deviation"},
            {"player", player(w.player)},
            {"type", type(w.player, w.type)},
            {"others", {{"actions", actions}, {"chance", chance}}},
            {"reference", strategy(w.reference)},
            {"deviation", strategy(w.deviation)},
            {"reference_payoff", rational(w.reference_payoff)},
            {"deviation_payoff", rational(w.deviation_payoff)},
            {"summary", "deviating earns " + w.deviation_payoff.str() + " > " + w.reference_payoff.str()}};
  }

  json encode(const NoDominantWitness& w) const {
    json refutations = json::array();
    for (const auto& d : w.refutations) refutations.push_back(encode(d));
    return {{"kind", "no-dominant"},
            {"player", player(w.player)},
            {"type", type(w.player, w.type)},
            {"refutations", refutations},
            {"summary", "every pure strategy has a profitable deviation"}};
  }

  json encode(const BoundsWitness& w) const {
    json out{{"kind", "bounds"},
             {"player", player(w.player)},
             {"type", type(w.player, w.type)},
             {"infoset", infoset(w.infoset)},
             {"plan", plan(w.plan)},
             {"deviation", plan(w.deviation)},
             {"worst", rational(w.worst)},
             {"best", rational(w.best)},
             {"summary", "at " + tree_.infoset(w.infoset).name + ": worst case " + w.worst.str() +
                             " < best deviation " + w.best.str()}};
    if (!w.plan_free.empty()) out["plan_free"] = free_set(w.player, w.plan_free);
    if (!w.deviation_free.empty()) out["deviation_free"] = free_set(w.player, w.deviation_free);
    return out;
  }

  json encode(const CoalitionWitness& w) const {
    json types = json::object(), deviation = json::object(), base = json::object(), gain = json::object();
    json coalition = json::array();
    for (int p = 0; p < static_cast<int>(w.types.size()); ++p) {
      types[tree_.player_name(p)] = mech_.types[p][w.types[p]].name;
      deviation[tree_.player_name(p)] = strategy(w.deviation[p]);
    }
    for (std::size_t k = 0; k < w.coalition.size(); ++k) {
      coalition.push_back(player(w.coalition[k]));
      base[tree_.player_name(w.coalition[k])] = rational(w.truthful_payoffs[k]);
      gain[tree_.player_name(w.coalition[k])] = rational(w.deviation_payoffs[k]);
    }
    return {{"kind", "coalition"},     {"types", types},         {"coalition", coalition},
            {"deviation", deviation}, {"truthful_payoffs", base}, {"deviation_payoffs", gain},
            {"summary", "every coalition member strictly gains"}};
  }

  json encode(const SelectionWitness& w) const {
    json selection = json::array();
    for (const auto& s : w.selection)
      selection.push_back({{"player", player(s.player)}, {"type", type(s.player, s.type)}, {"strategy", strategy(s.strategy)}});
    return {{"kind", "selection"},
            {"player", player(w.player)},
            {"type", type(w.player, w.type)},
            {"belief", belief(w.belief)},
            {"selection", selection},
            {"candidate", strategy(w.candidate)},
            {"better", strategy(w.better)},
            {"candidate_value", rational(w.candidate_value)},
            {"better_value", rational(w.better_value)},
            {"summary", "better reply earns " + w.better_value.str() + " > " + w.candidate_value.str()}};
  }

  json encode(const NoRobustWitness& w) const {
    json refutations = json::array();
    for (const auto& s : w.refutations) refutations.push_back(encode(s));
    return {{"kind", "no-robust"},
            {"player", player(w.player)},
            {"type", type(w.player, w.type)},
            {"belief", belief(w.belief)},
            {"refutations", refutations},
            {"summary", "no pure strategy is robust under belief " + w.belief.name}};
  }

  json encode(const Witness& w) const {
    return std::visit([&](const auto& x) { return encode(x); }, w);
  }

  // Decoding.
  int player_of(const json& j) const {
    if (auto p = tree_.find_player(j.get<std::string>())) return *p;
    throw MalformedStrategy("unknown player " + j.dump());
  }
  int type_of(int p, const json& j) const {
    const std::string name = j.get<std::string>();
    for (int t = 0; t < static_cast<int>(mech_.types[p].size()); ++t)
      if (mech_.types[p][t].name == name) return t;
    throw MalformedStrategy("unknown type " + name);
  }
  int infoset_of(const json& j) const {
    if (auto g = tree_.find_infoset(j.get<std::string>())) return *g;
    throw MalformedStrategy("unknown information set " + j.dump());
  }
  int action_of(int g, const json& j) const {
    const auto& actions = tree_.infoset(g).actions;
    const auto it = std::find(actions.begin(), actions.end(), j.get<std::string>());
    if (it == actions.end()) throw MalformedStrategy("unknown action " + j.dump());
    return static_cast<int>(it - actions.begin());
  }
  static Rational rational_of(const json& j) {
    if (auto r = Rational::parse(j.get<std::string>())) return *r;
    throw MalformedStrategy("bad rational " + j.dump());
  }

  std::vector<int> actions_of(int p, const json& j, bool total) const {
    std::vector<int> out(tree_.player_infosets(p).size(), -1);
    for (const auto& [name, action] : j.items()) {
      const int g = infoset_of(name);
      if (tree_.infoset(g).player != p) throw MalformedStrategy("information set " + name + " belongs to another player");
      out[tree_.infoset(g).local] = action_of(g, action);
    }
    if (total && std::find(out.begin(), out.end(), -1) != out.end())
      throw MalformedStrategy("strategy is not total");
    return out;
  }
  PureStrategy strategy_of(int p, const json& j) const { return {p, actions_of(p, j, true)}; }
  PartialPlan plan_of(int p, const json& j) const {
    PartialPlan out{p, -1, actions_of(p, j.at("actions"), false)};
    if (j.contains("anchor")) out.anchor = infoset_of(j.at("anchor"));
    return out;
  }
  std::vector<bool> free_of(int p, const json& j, const char* key) const {
    if (!j.contains(key)) return {};
    std::vector<bool> out(tree_.player_infosets(p).size(), false);
    for (const auto& g : j.at(key)) out[tree_.infoset(infoset_of(g)).local] = true;
    return out;
  }
  FirstOrderBelief belief_of(const json& j) const {
    FirstOrderBelief b{player_of(j.at("owner")), j.at("name").get<std::string>(), {}};
    for (const auto& pt : j.at("support")) {
      BeliefPoint point{std::vector<int>(tree_.num_players(), -1), rational_of(pt.at("weight"))};
      for (const auto& [name, t] : pt.at("types").items()) {
        const int q = player_of(name);
        point.types[q] = type_of(q, t);
      }
      b.support.push_back(std::move(point));
    }
    return b;
  }

  DeviationWitness deviation_of(const json& j) const {
    DeviationWitness w;
    w.player = player_of(j.at("player"));
    w.type = type_of(w.player, j.at("type"));
    for (const auto& [name, a] : j.at("others").at("actions").items()) {
      const int g = infoset_of(name);
      w.others.infoset_actions[g] = action_of(g, a);
    }
    for (const auto& [node, e] : j.at("others").at("chance").items()) w.others.chance[std::stoi(node)] = e.get<int>();
    w.reference = strategy_of(w.player, j.at("reference"));
    w.deviation = strategy_of(w.player, j.at("deviation"));
    w.reference_payoff = rational_of(j.at("reference_payoff"));
    w.deviation_payoff = rational_of(j.at("deviation_payoff"));
    return w;
  }

  SelectionWitness selection_of(const json& j) const {
    SelectionWitness w;
    w.player = player_of(j.at("player"));
    w.type = type_of(w.player, j.at("type"));
    w.belief = belief_of(j.at("belief"));
    for (const auto& s : j.at("selection")) {
      const int q = player_of(s.at("player"));
      w.selection.push_back({q, type_of(q, s.at("type")), strategy_of(q, s.at("strategy"))});
    }
    w.candidate = strategy_of(w.player, j.at("candidate"));
    w.better = strategy_of(w.player, j.at("better"));
    w.candidate_value = rational_of(j.at("candidate_value"));
    w.better_value = rational_of(j.at("better_value"));
    return w;
  }

  Witness decode(const json& j) const {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "deviation") return deviation_of(j);
    if (kind == "no-dominant") {
      NoDominantWitness w;
      w.player = player_of(j.at("player"));
      w.type = type_of(w.player, j.at("type"));
      for (const auto& d : j.at("refutations")) w.refutations.push_back(deviation_of(d));
      return w;
    }
    if (kind == "bounds") {
      BoundsWitness w;
      w.player = player_of(j.at("player"));
      w.type = type_of(w.player, j.at("type"));
      w.infoset = infoset_of(j.at("infoset"));
      w.plan = plan_of(w.player, j.at("plan"));
      w.plan_free = free_of(w.player, j, "plan_free");
      w.deviation = plan_of(w.player, j.at("deviation"));
      w.deviation_free = free_of(w.player, j, "deviation_free");
      w.worst = rational_of(j.at("worst"));
      w.best = rational_of(j.at("best"));
      return w;
    }
    if (kind == "coalition") {
      CoalitionWitness w;
      const int n = tree_.num_players();
      w.types.assign(n, -1);
      w.deviation.resize(n);
      for (int p = 0; p < n; ++p) {
        w.types[p] = type_of(p, j.at("types").at(tree_.player_name(p)));
        w.deviation[p] = strategy_of(p, j.at("deviation").at(tree_.player_name(p)));
      }
      for (const auto& m : j.at("coalition")) {
        const int p = player_of(m);
        w.coalition.push_back(p);
        w.truthful_payoffs.push_back(rational_of(j.at("truthful_payoffs").at(tree_.player_name(p))));
        w.deviation_payoffs.push_back(rational_of(j.at("deviation_payoffs").at(tree_.player_name(p))));
      }
      return w;
    }
    if (kind == "selection") return selection_of(j);
    if (kind == "no-robust") {
      NoRobustWitness w;
      w.player = player_of(j.at("player"));
      w.type = type_of(w.player, j.at("type"));
      w.belief = belief_of(j.at("belief"));
      for (const auto& s : j.at("refutations")) w.refutations.push_back(selection_of(s));
      return w;
    }
    throw MalformedStrategy("unknown witness kind " + kind);
  }

 private:
  const Mechanism& mech_;
  const GameTree& tree_;
};

std::vector<std::vector<FirstOrderBelief>> families_for(const Mechanism& mech,
                                                        const std::vector<FirstOrderBelief>& supplied,
                                                        std::vector<std::string>& notes) {
  std::vector<std::vector<FirstOrderBelief>> families(mech.num_players());
  for (const FirstOrderBelief& b : supplied) families.at(b.owner).push_back(b);
  for (int p = 0; p < mech.num_players(); ++p) {
    if (!families[p].empty()) continue;
    families[p] = builtin_beliefs(mech, p);
    if (!supplied.empty()) notes.push_back("built-in beliefs used for " + mech.tree.player_name(p));
  }
  return families;
}

}  // namespace

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::kSP:
      return "sp";
    case Criterion::kOSP:
      return "osp";
    case Criterion::kWGSP:
      return "wgsp";
    case Criterion::kStrongOSP:
      return "strong-osp";
    case Criterion::kOneStep:
      return "one-step";
    case Criterion::kFSimple:
      return "f-simple";
    case Criterion::kStrategic:
      return "strategic";
  }
  return "?";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
  for (Criterion c : {Criterion::kSP, Criterion::kOSP, Criterion::kWGSP, Criterion::kStrongOSP, Criterion::kOneStep,
                      Criterion::kFSimple, Criterion::kStrategic})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

CheckResult run_check(const GameDoc& doc, const CheckOptions& options) {
  const Mechanism& mech = doc.mechanism;
  Budget budget(options.budget ? options.budget : default_budget());
  json opts{{"budget", budget.limit()}};
  std::vector<std::string> extra;

  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  switch (options.criterion) {
    case Criterion::kSP:
      v = is_strategy_proof(mech, budget);
      break;
    case Criterion::kOSP:
      v = is_osp(mech, budget);
      break;
    case Criterion::kWGSP:
      if (options.coalition_size < 1) throw MalformedStrategy("coalition size must be positive");
      opts["coalition_size"] = options.coalition_size;
      v = is_weakly_group_sp(mech, options.coalition_size, budget);
      break;
    case Criterion::kStrongOSP:
      v = strong_osp(mech, budget);
      break;
    case Criterion::kOneStep:
      v = one_step_simple(mech, budget);
      break;
    case Criterion::kFSimple: {
      ForesightSpec spec = options.foresight    ? *options.foresight
                           : doc.foresight       ? *doc.foresight
                                                 : ForesightSpec(ForesightPreset::kFull);
      opts["foresight"] = to_string(spec.preset());
      v = is_f_simple(mech, spec, budget);
      break;
    }
    case Criterion::kStrategic: {
      const auto& supplied = options.beliefs ? *options.beliefs : doc.beliefs;
      opts["beliefs"] = supplied.empty() ? "builtin" : "supplied";
      v = is_strategically_simple(mech, families_for(mech, supplied, extra), budget);
      break;
    }
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const Codec codec(mech);
  json params = json::object();
  for (const auto& [k, val] : mech.params) params[k] = val;
  json players = json::array();
  for (int p = 0; p < mech.num_players(); ++p) players.push_back(mech.tree.player_name(p));

  json certificate{{"evaluations", v.certificate.evaluations}, {"comparisons", v.certificate.comparisons}};
  json notes = v.certificate.notes;
  for (const auto& n : extra) notes.push_back(n);
  certificate["notes"] = notes;
  if (!v.certificate.plans.empty()) {
    json plans = json::array();
    for (const PlanRecord& r : v.certificate.plans)
      plans.push_back({{"player", codec.player(r.player)},
                       {"type", codec.type(r.player, r.type)},
                       {"anchor", codec.infoset(r.anchor)},
                       {"plan", codec.plan(r.plan)["actions"]},
                       {"truthful_restriction", r.truthful_restriction}});
    certificate["plans"] = plans;
  }
  if (!v.certificate.robust.empty()) {
    json robust = json::array();
    for (const RobustRecord& r : v.certificate.robust) {
      json set = json::array();
      for (const PureStrategy& s : r.robust) set.push_back(codec.strategy(s));
      robust.push_back(
          {{"player", codec.player(r.player)}, {"type", codec.type(r.player, r.type)}, {"belief", r.belief}, {"robust", set}});
    }
    certificate["robust"] = robust;
  }

  json report{{"mechanism", {{"name", mech.name}, {"params", params}, {"players", players},
                             {"nodes", mech.tree.num_nodes()}, {"outcomes", mech.tree.num_outcomes()}}},
              {"criterion", to_string(options.criterion)},
              {"options", opts},
              {"holds", v.holds},
              {"witness", v.witness ? codec.encode(*v.witness) : json(nullptr)},
              {"certificate", certificate},
              {"wall_ms", wall_ms}};
  if (options.criterion == Criterion::kStrategic) report["qualifier"] = "holds on supplied family";

  CheckResult result;
  result.holds = v.holds;
  result.json = report.dump();
  result.verdict = std::move(v);
  return result;
}

std::string witness_to_json(const Mechanism& mech, const Witness& witness) {
  return Codec(mech).encode(witness).dump();
}

Witness witness_from_json(const Mechanism& mech, std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.is_object() && !j.contains("kind") && j.contains("witness")) j = j.at("witness");
    if (!j.is_object()) throw MalformedStrategy("no witness in the given JSON");
    return Codec(mech).decode(j);
  } catch (const json::exception& e) {
    throw MalformedStrategy(std::string("bad witness JSON: ") + e.what());
  }
}

}  // namespace mechsimp
