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

#include "mechsimp/gamedoc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mechsimp {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;

  const Token& at(std::size_t k) const { return tokens[k]; }
  std::size_t size() const { return tokens.size(); }
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      const std::size_t start = k;
      while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      if (k > start) line.tokens.push_back({std::string(raw.substr(start, k - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

// Builds documents from token lines, collecting positioned errors.
class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  std::vector<ParseError> take_errors() { return std::move(errors_); }
  bool failed() const { return !errors_.empty(); }

  void error(const Line& line, std::size_t token, std::string message) {
    const int column = token < line.size() ? line.at(token).column : 1;
    errors_.push_back({line.number, column, std::move(message)});
  }
  void error(std::string message) { errors_.push_back({0, 0, std::move(message)}); }

  // The header line; false if absent or of another version.
  bool header() {
    if (lines_.empty()) {
      error("empty document; expected header gamedoc/" + std::to_string(kFormatVersion));
      return false;
    }
    const Line& first = lines_.front();
    const std::string& h = first.at(0).text;
    if (h.rfind("gamedoc/", 0) != 0 || first.size() != 1) {
      error(first, 0, "expected header gamedoc/" + std::to_string(kFormatVersion));
      return false;
    }
    if (h != "gamedoc/" + std::to_string(kFormatVersion)) {
      error(first, 0, "unsupported format version " + h.substr(8));
      return false;
    }
    return true;
  }

  std::span<const Line> body() const { return std::span<const Line>(lines_).subspan(lines_.empty() ? 0 : 1); }

  bool name_ok(const Line& line, std::size_t k, const char* what, bool allow_colon = true) {
    const std::string& t = line.at(k).text;
    if (t.find('=') != std::string::npos || (!allow_colon && t.find(':') != std::string::npos)) {
      error(line, k, std::string(what) + " '" + t + "' contains a reserved character");
      return false;
    }
    return true;
  }

  std::optional<Rational> rational(const Line& line, std::size_t k, std::string_view text) {
    std::optional<Rational> r;
    try {
      r = Rational::parse(text);
    } catch (const std::exception&) {
      r.reset();
    }
    if (!r) error(line, k, "bad rational '" + std::string(text) + "'");
    return r;
  }

  std::optional<int> integer(const Line& line, std::size_t k) {
    const std::string& t = line.at(k).text;
    int value = 0;
    std::size_t used = 0;
    try {
      value = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || used == 0 || value < 0) {
      error(line, k, "expected a non-negative integer, got '" + t + "'");
      return std::nullopt;
    }
    return value;
  }

  // Splits "key=value" at the first '='.
  std::optional<std::pair<std::string, std::string>> pair(const Line& line, std::size_t k) {
    const std::string& t = line.at(k).text;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == t.size()) {
      error(line, k, "expected key=value, got '" + t + "'");
      return std::nullopt;
    }
    return std::pair{t.substr(0, eq), t.substr(eq + 1)};
  }

  std::optional<int> lookup(const Line& line, std::size_t k, const std::map<std::string, int>& table,
                            const char* what) {
    return lookup(line, k, line.at(k).text, table, what);
  }
  std::optional<int> lookup(const Line& line, std::size_t k, const std::string& name,
                            const std::map<std::string, int>& table, const char* what) {
    const auto it = table.find(name);
    if (it == table.end()) {
      error(line, k, std::string("undefined ") + what + " '" + name + "'");
      return std::nullopt;
    }
    return it->second;
  }

  void read_foresight(const Line& line, const GameTree& tree, std::map<int, std::vector<int>>& table) {
    if (line.size() < 2) return error(line, 0, "foresight needs an anchor information set");
    std::map<std::string, int> names;
    for (int g = 0; g < tree.num_infosets(); ++g) names[tree.infoset(g).name] = g;
    const auto anchor = lookup(line, 1, names, "information set");
    if (!anchor) return;
    if (table.contains(*anchor)) return error(line, 1, "foresight for " + line.at(1).text + " given twice");
    std::vector<int> members;
    for (std::size_t k = 2; k < line.size(); ++k)
      if (auto g = lookup(line, k, names, "information set")) members.push_back(*g);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    table[*anchor] = members;
    spots_["foresight " + tree.infoset(*anchor).name] = {line.number, line.at(1).column};
  }

  void read_belief(const Line& line, const Mechanism& mech, std::vector<FirstOrderBelief>& out) {
    if (line.size() < 4) return error(line, 0, "belief needs an owner, a name, a weight and a type profile");
    const GameTree& tree = mech.tree;
    std::map<std::string, int> players;
    for (int p = 0; p < tree.num_players(); ++p) players[tree.player_name(p)] = p;
    const auto owner = lookup(line, 1, players, "player");
    if (!name_ok(line, 2, "belief name")) return;
    const auto weight = rational(line, 3, line.at(3).text);
    if (!owner || !weight) return;
    BeliefPoint pt{std::vector<int>(tree.num_players(), -2), *weight};
    pt.types[*owner] = -1;
    bool ok = true;
    for (std::size_t k = 4; k < line.size(); ++k) {
      const std::string& t = line.at(k).text;
      const auto colon = t.find(':');
      if (colon == std::string::npos) {
        error(line, k, "expected player:type, got '" + t + "'");
        ok = false;
        continue;
      }
      const auto q = lookup(line, k, t.substr(0, colon), players, "player");
      if (!q) {
        ok = false;
        continue;
      }
      if (*q == *owner) {
        error(line, k, "a belief does not cover its owner's type");
        ok = false;
        continue;
      }
      if (pt.types[*q] != -2) {
        error(line, k, "player " + tree.player_name(*q) + " listed twice");
        ok = false;
        continue;
      }
      std::map<std::string, int> types;
      for (int i = 0; i < static_cast<int>(mech.types[*q].size()); ++i) types[mech.types[*q][i].name] = i;
      const auto ty = lookup(line, k, t.substr(colon + 1), types, "type");
      if (!ty) {
        ok = false;
        continue;
      }
      pt.types[*q] = *ty;
    }
    for (int q = 0; q < tree.num_players() && ok; ++q) {
      if (pt.types[q] == -2) {
        error(line, 0, "belief point has no type for " + tree.player_name(q));
        ok = false;
      }
    }
    if (!ok) return;
    const std::string& name = line.at(2).text;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const FirstOrderBelief& b) { return b.owner == *owner && b.name == name; });
    if (it == out.end()) {
      out.push_back({*owner, name, {}});
      it = std::prev(out.end());
      spots_["belief " + name] = {line.number, line.at(2).column};
    }
    it->support.push_back(std::move(pt));
  }

  void report(const std::vector<Violation>& violations) {
    for (const Violation& v : violations) {
      const auto it = spots_.find(v.where);
      if (it == spots_.end())
        errors_.push_back({0, 0, v.where + ": " + v.message});
      else
        errors_.push_back({it->second.first, it->second.second, v.where + ": " + v.message});
    }
  }

  void spot(std::string where, const Line& line, std::size_t k) {
    spots_.emplace(std::move(where), std::pair{line.number, line.at(k).column});
  }

 private:
  std::vector<Line> lines_;
  std::vector<ParseError> errors_;
  std::map<std::string, std::pair<int, int>> spots_;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += " " + p;
  return out;
}

}  // namespace

std::string ParseError::str() const {
  if (line == 0) return message;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

Parsed<GameDoc> parse_gamedoc(std::string_view text) {
  Reader rd(text);
  Parsed<GameDoc> result;
  if (!rd.header()) {
    result.errors = rd.take_errors();
    return result;
  }
  GameDoc doc;
  Mechanism& mech = doc.mechanism;
  GameTree& tree = mech.tree;

  std::map<std::string, int> players, outcomes, infosets;
  std::vector<const Line*> node_lines, type_lines, truthful_lines, foresight_lines, belief_lines;
  std::vector<const Line*> infoset_lines;
  const Line* root_line = nullptr;
  bool seen_mechanism = false;

  for (const Line& line : rd.body()) {
    const std::string& d = line.at(0).text;
    if (d == "mechanism") {
      if (line.size() != 2) {
        rd.error(line, 0, "mechanism takes one name");
      } else if (seen_mechanism) {
        rd.error(line, 0, "mechanism given twice");
      } else if (rd.name_ok(line, 1, "mechanism name")) {
        mech.name = line.at(1).text;
      }
      seen_mechanism = true;
    } else if (d == "param") {
      if (line.size() != 3)
        rd.error(line, 0, "param takes a key and a value");
      else if (rd.name_ok(line, 1, "parameter key") && rd.name_ok(line, 2, "parameter value"))
        mech.params.emplace_back(line.at(1).text, line.at(2).text);
    } else if (d == "player") {
      if (line.size() != 2) {
        rd.error(line, 0, "player takes one name");
      } else if (rd.name_ok(line, 1, "player name", false)) {
        if (players.contains(line.at(1).text)) {
          rd.error(line, 1, "duplicate player '" + line.at(1).text + "'");
        } else {
          players[line.at(1).text] = tree.add_player(line.at(1).text);
          rd.spot("player " + line.at(1).text, line, 1);
        }
      }
    } else if (d == "outcome") {
      if (line.size() != 2) {
        rd.error(line, 0, "outcome takes one label");
      } else if (rd.name_ok(line, 1, "outcome label")) {
        if (outcomes.contains(line.at(1).text))
          rd.error(line, 1, "duplicate outcome '" + line.at(1).text + "'");
        else
          outcomes[line.at(1).text] = tree.add_outcome(line.at(1).text);
      }
    } else if (d == "infoset") {
      if (line.size() < 3)
        rd.error(line, 0, "infoset needs a name and a player");
      else
        infoset_lines.push_back(&line);
    } else if (d == "root") {
      if (line.size() != 2)
        rd.error(line, 0, "root takes one node id");
      else if (root_line)
        rd.error(line, 0, "root given twice");
      else
        root_line = &line;
    } else if (d == "node") {
      if (line.size() < 3)
        rd.error(line, 0, "node needs an id and a kind");
      else
        node_lines.push_back(&line);
    } else if (d == "type") {
      if (line.size() < 3)
        rd.error(line, 0, "type needs a player and a name");
      else
        type_lines.push_back(&line);
    } else if (d == "truthful") {
      if (line.size() < 3)
        rd.error(line, 0, "truthful needs a player and a type");
      else
        truthful_lines.push_back(&line);
    } else if (d == "foresight") {
      foresight_lines.push_back(&line);
    } else if (d == "belief") {
      belief_lines.push_back(&line);
    } else {
      rd.error(line, 0, "unknown directive '" + d + "'");
    }
  }

  for (const Line* lp : infoset_lines) {
    const Line& line = *lp;
    bool ok = rd.name_ok(line, 1, "information set name");
    const auto p = rd.lookup(line, 2, players, "player");
    std::vector<std::string> actions;
    for (std::size_t k = 3; k < line.size(); ++k) {
      ok = rd.name_ok(line, k, "action") && ok;
      actions.push_back(line.at(k).text);
    }
    if (!ok || !p) continue;
    if (infosets.contains(line.at(1).text)) {
      rd.error(line, 1, "duplicate information set '" + line.at(1).text + "'");
      continue;
    }
    infosets[line.at(1).text] = tree.add_infoset(*p, line.at(1).text, actions);
    rd.spot("infoset " + line.at(1).text, line, 1);
  }

  // Nodes: ids must be dense; build in id order, then wire children.
  std::map<int, const Line*> by_id;
  for (const Line* lp : node_lines) {
    const auto id = rd.integer(*lp, 1);
    if (!id) continue;
    if (!by_id.emplace(*id, lp).second) rd.error(*lp, 1, "duplicate node id " + std::to_string(*id));
  }
  const int n_nodes = static_cast<int>(by_id.size());
  if (!by_id.empty() && by_id.rbegin()->first != n_nodes - 1)
    rd.error(*by_id.rbegin()->second, 1, "node ids must run from 0 without gaps");
  if (rd.failed()) {
    result.errors = rd.take_errors();
    return result;
  }

  std::vector<std::vector<std::pair<int, std::size_t>>> children(n_nodes);  // child id, token
  for (const auto& [id, lp] : by_id) {
    const Line& line = *lp;
    const std::string& kind = line.at(2).text;
    rd.spot("node " + std::to_string(id), line, 1);
    int made = -1;
    if (kind == "decision") {
      const auto g = line.size() >= 4 ? rd.lookup(line, 3, infosets, "information set") : std::nullopt;
      if (line.size() < 4) rd.error(line, 2, "decision node needs an information set");
      for (std::size_t k = 4; k < line.size(); ++k)
        if (auto c = rd.integer(line, k)) children[id].emplace_back(*c, k);
      made = g ? tree.add_decision(*g) : tree.add_terminal(-1);
    } else if (kind == "chance") {
      std::vector<std::string> labels;
      std::vector<Rational> probs;
      if ((line.size() - 3) % 3 != 0 || line.size() == 3)
        rd.error(line, 2, "chance node needs label, probability, child triples");
      for (std::size_t k = 3; k + 2 < line.size(); k += 3) {
        rd.name_ok(line, k, "chance label");
        labels.push_back(line.at(k).text);
        const auto pr = rd.rational(line, k + 1, line.at(k + 1).text);
        probs.push_back(pr.value_or(Rational(0)));
        if (auto c = rd.integer(line, k + 2)) children[id].emplace_back(*c, k + 2);
      }
      made = tree.add_chance(labels, probs);
    } else if (kind == "terminal") {
      std::optional<int> o;
      if (line.size() != 4)
        rd.error(line, 2, "terminal node takes one outcome");
      else
        o = rd.lookup(line, 3, outcomes, "outcome");
      made = tree.add_terminal(o.value_or(-1));
    } else {
      rd.error(line, 2, "unknown node kind '" + kind + "'");
      made = tree.add_terminal(-1);
    }
    (void)made;
  }
  for (int id = 0; id < n_nodes; ++id) {
    for (const auto& [c, k] : children[id]) {
      if (c >= n_nodes)
        rd.error(*by_id[id], k, "undefined node " + std::to_string(c));
      else
        tree.add_child(id, c);
    }
  }
  if (root_line) {
    if (auto r = rd.integer(*root_line, 1)) {
      if (*r >= n_nodes)
        rd.error(*root_line, 1, "undefined node " + std::to_string(*r));
      else
        tree.set_root(*r);
    }
  }

  mech.types.assign(tree.num_players(), {});
  std::vector<std::map<std::string, int>> type_index(tree.num_players());
  for (const Line* lp : type_lines) {
    const Line& line = *lp;
    const auto p = rd.lookup(line, 1, players, "player");
    if (!p || !rd.name_ok(line, 2, "type name")) continue;
    const std::string& name = line.at(2).text;
    if (type_index[*p].contains(name)) {
      rd.error(line, 2, "duplicate type '" + name + "'");
      continue;
    }
    TypeSpec ts{name, Utility(tree.num_outcomes()), std::nullopt};
    std::vector<bool> given(tree.num_outcomes(), false);
    for (std::size_t k = 3; k < line.size(); ++k) {
      const auto kv = rd.pair(line, k);
      if (!kv) continue;
      const auto o = rd.lookup(line, k, kv->first, outcomes, "outcome");
      const auto v = rd.rational(line, k, kv->second);
      if (!o || !v) continue;
      if (given[*o]) {
        rd.error(line, k, "payoff for '" + kv->first + "' given twice");
        continue;
      }
      given[*o] = true;
      ts.utility[*o] = *v;
    }
    for (int o = 0; o < tree.num_outcomes(); ++o)
      if (!given[o]) rd.error(line, 2, "type " + name + " has no payoff for outcome '" + tree.outcome_label(o) + "'");
    type_index[*p][name] = static_cast<int>(mech.types[*p].size());
    rd.spot("type " + tree.player_name(*p) + "/" + name, line, 2);
    mech.types[*p].push_back(std::move(ts));
  }

  for (const Line* lp : truthful_lines) {
    const Line& line = *lp;
    const auto p = rd.lookup(line, 1, players, "player");
    if (!p) continue;
    const auto t = rd.lookup(line, 2, type_index[*p], "type");
    if (!t) continue;
    TypeSpec& ts = mech.types[*p][*t];
    if (ts.truthful) {
      rd.error(line, 2, "truthful strategy for " + ts.name + " given twice");
      continue;
    }
    const auto& own = tree.player_infosets(*p);
    PureStrategy s{*p, std::vector<int>(own.size(), -1)};
    for (std::size_t k = 3; k < line.size(); ++k) {
      const auto kv = rd.pair(line, k);
      if (!kv) continue;
      const auto g = rd.lookup(line, k, kv->first, infosets, "information set");
      if (!g) continue;
      const InfoSet& info = tree.infoset(*g);
      if (info.player != *p) {
        rd.error(line, k, "information set " + info.name + " belongs to another player");
        continue;
      }
      const auto a = std::find(info.actions.begin(), info.actions.end(), kv->second);
      if (a == info.actions.end()) {
        rd.error(line, k, "undefined action '" + kv->second + "' at " + info.name);
        continue;
      }
      if (s.actions[info.local] >= 0) {
        rd.error(line, k, "action for " + info.name + " given twice");
        continue;
      }
      s.actions[info.local] = static_cast<int>(a - info.actions.begin());
    }
    for (int g : own)
      if (s.actions[tree.infoset(g).local] < 0)
        rd.error(line, 2, "truthful strategy has no action at " + tree.infoset(g).name);
    ts.truthful = std::move(s);
  }

  if (rd.failed()) {
    result.errors = rd.take_errors();
    return result;
  }
  rd.report(validate(mech));
  if (rd.failed()) {
    result.errors = rd.take_errors();
    return result;
  }

  if (!foresight_lines.empty()) {
    std::map<int, std::vector<int>> table;
    for (const Line* lp : foresight_lines) rd.read_foresight(*lp, tree, table);
    doc.foresight = ForesightSpec::custom(std::move(table));
    if (!rd.failed()) rd.report(validate(tree, *doc.foresight));
  }
  for (const Line* lp : belief_lines) rd.read_belief(*lp, mech, doc.beliefs);
  if (!rd.failed())
    for (const FirstOrderBelief& b : doc.beliefs) rd.report(validate(mech, b));

  result.errors = rd.take_errors();
  if (result.errors.empty()) result.value = std::move(doc);
  return result;
}

Parsed<ForesightSpec> parse_foresight(std::string_view text, const GameTree& tree) {
  Reader rd(text);
  Parsed<ForesightSpec> result;
  if (rd.header()) {
    std::map<int, std::vector<int>> table;
    for (const Line& line : rd.body()) {
      if (line.at(0).text == "foresight")
        rd.read_foresight(line, tree, table);
      else
        rd.error(line, 0, "only foresight lines are allowed here");
    }
    ForesightSpec spec = ForesightSpec::custom(std::move(table));
    if (!rd.failed()) rd.report(validate(tree, spec));
    if (!rd.failed()) result.value = std::move(spec);
  }
  result.errors = rd.take_errors();
  return result;
}

Parsed<std::vector<FirstOrderBelief>> parse_beliefs(std::string_view text, const Mechanism& mech) {
  Reader rd(text);
  Parsed<std::vector<FirstOrderBelief>> result;
  if (rd.header()) {
    std::vector<FirstOrderBelief> beliefs;
    for (const Line& line : rd.body()) {
      if (line.at(0).text == "belief")
        rd.read_belief(line, mech, beliefs);
      else
        rd.error(line, 0, "only belief lines are allowed here");
    }
    if (!rd.failed())
      for (const FirstOrderBelief& b : beliefs) rd.report(validate(mech, b));
    if (!rd.failed()) result.value = std::move(beliefs);
  }
  result.errors = rd.take_errors();
  return result;
}

std::string serialize(const GameDoc& doc) {
  const Mechanism& mech = doc.mechanism;
  const GameTree& tree = mech.tree;
  std::ostringstream out;
  out << "gamedoc/" << doc.version << "\n";
  if (!mech.name.empty()) out << "mechanism " << mech.name << "\n";
  for (const auto& [k, v] : mech.params) out << "param " << k << " " << v << "\n";
  for (int p = 0; p < tree.num_players(); ++p) out << "player " << tree.player_name(p) << "\n";
  for (int o = 0; o < tree.num_outcomes(); ++o) out << "outcome " << tree.outcome_label(o) << "\n";
  for (int g = 0; g < tree.num_infosets(); ++g) {
    const InfoSet& info = tree.infoset(g);
    out << "infoset " << info.name << " " << tree.player_name(info.player) << join(info.actions) << "\n";
  }
  out << "root " << tree.root() << "\n";
  for (int id = 0; id < tree.num_nodes(); ++id) {
    const Node& n = tree.node(id);
    out << "node " << id;
    switch (n.kind) {
      case NodeKind::kDecision:
        out << " decision " << tree.infoset(n.infoset).name;
        for (int c : n.children) out << " " << c;
        break;
      case NodeKind::kChance:
        out << " chance";
        for (std::size_t k = 0; k < n.children.size(); ++k)
          out << " " << n.labels[k] << " " << n.probs[k].str() << " " << n.children[k];
        break;
      case NodeKind::kTerminal:
        out << " terminal " << tree.outcome_label(n.outcome);
        break;
    }
    out << "\n";
  }
  for (int p = 0; p < tree.num_players(); ++p) {
    for (const TypeSpec& t : mech.types[p]) {
      out << "type " << tree.player_name(p) << " " << t.name;
      for (int o = 0; o < tree.num_outcomes(); ++o) out << " " << tree.outcome_label(o) << "=" << t.utility[o].str();
      out << "\n";
    }
  }
  for (int p = 0; p < tree.num_players(); ++p) {
    for (const TypeSpec& t : mech.types[p]) {
      if (!t.truthful) continue;
      out << "truthful " << tree.player_name(p) << " " << t.name;
      for (int g : tree.player_infosets(p)) {
        const InfoSet& info = tree.infoset(g);
        out << " " << info.name << "=" << info.actions[t.truthful->actions[info.local]];
      }
      out << "\n";
    }
  }
  if (doc.foresight) {
    for (const auto& [anchor, members] : doc.foresight->table()) {
      out << "foresight " << tree.infoset(anchor).name;
      for (int g : members) out << " " << tree.infoset(g).name;
      out << "\n";
    }
  }
  for (const FirstOrderBelief& b : doc.beliefs) {
    for (const BeliefPoint& pt : b.support) {
      out << "belief " << tree.player_name(b.owner) << " " << b.name << " " << pt.weight.str();
      for (int q = 0; q < static_cast<int>(pt.types.size()); ++q)
        if (q != b.owner) out << " " << tree.player_name(q) << ":" << mech.types[q][pt.types[q]].name;
      out << "\n";
    }
  }
  return out.str();
}

std::string serialize(const Mechanism& mech) {
  GameDoc doc;
  doc.mechanism = mech;
  return serialize(doc);
}

}  // namespace mechsimp
