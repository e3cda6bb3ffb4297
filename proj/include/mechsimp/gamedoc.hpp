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

// Line-oriented game description format.
//
//   gamedoc/1
//   mechanism <name>
//   param <key> <value>
//   player <name>
//   outcome <label>
//   infoset <name> <player> <action>...
//   root <node>
//   node <id> decision <infoset> <child>...
//   node <id> chance (<label> <probability> <child>)...
//   node <id> terminal <outcome>
//   type <player> <name> (<outcome>=<payoff>)...
//   truthful <player> <type> (<infoset>=<action>)...
//   foresight <anchor> <infoset>...
//   belief <owner> <name> <weight> (<player>:<type>)...
//
// Tokens are separated by whitespace and may not contain '=' or '#';
// '#' starts a comment. Node ids run from 0 without gaps. Rationals are
// written "p", "p/q" or as finite decimals. Belief lines sharing a name
// form one belief, one support point per line.

#ifndef MECHSIMP_GAMEDOC_HPP
#define MECHSIMP_GAMEDOC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mechsimp/belief.hpp"
#include "mechsimp/foresight.hpp"
#include "mechsimp/mechanism.hpp"

namespace mechsimp {

inline constexpr int kFormatVersion = 1;

struct GameDoc {
  int version = kFormatVersion;
  Mechanism mechanism;
  std::optional<ForesightSpec> foresight;  // custom table, when present
  std::vector<FirstOrderBelief> beliefs;

  friend bool operator==(const GameDoc& a, const GameDoc& b) {
    return a.version == b.version && a.mechanism == b.mechanism && a.beliefs == b.beliefs &&
           a.foresight.has_value() == b.foresight.has_value() &&
           (!a.foresight || a.foresight->table() == b.foresight->table());
  }
};

struct ParseError {
  int line = 0;    // 1-based; 0 when the problem has no single location
  int column = 0;  // 1-based
  std::string message;

  std::string str() const;
};

template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<ParseError> errors;

  bool ok() const { return value.has_value(); }
};

// Syntax, references and every validate() check.
Parsed<GameDoc> parse_gamedoc(std::string_view text);

// Documents holding only foresight or belief lines, resolved against an
// existing game.
Parsed<ForesightSpec> parse_foresight(std::string_view text, const GameTree& tree);
Parsed<std::vector<FirstOrderBelief>> parse_beliefs(std::string_view text, const Mechanism& mech);

// Canonical text; equal documents give identical bytes.
std::string serialize(const GameDoc& doc);
std::string serialize(const Mechanism& mech);

}  // namespace mechsimp

#endif  // MECHSIMP_GAMEDOC_HPP
