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

#include "mechsimp/generate.hpp"

#include <set>

#include "mechsimp/error.hpp"

namespace mechsimp {

namespace {

constexpr std::size_t kMaxGrid = 10'000;

Rational rational(std::string_view text, const std::string& what) {
  std::optional<Rational> r;
  try {
    r = Rational::parse(text);
  } catch (const std::exception&) {
  }
  if (!r) throw ConstructionError("bad " + what + " '" + std::string(text) + "'");
  return *r;
}

int integer(const std::string& text, const std::string& what) {
  const Rational r = rational(text, what);
  if (!r.is_integer() || r.num() < 0 || r.num() > 1'000'000)
    throw ConstructionError(what + " must be a small non-negative integer");
  return static_cast<int>(r.num());
}

std::vector<int> order(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const int k = integer(text.substr(pos, end - pos), what);
    if (k < 1) throw ConstructionError(what + " lists participants from 1");
    out.push_back(k - 1);
    pos = end + 1;
  }
  return out;
}

bool flag(const std::string& text, const std::string& what) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConstructionError(what + " must be true or false");
}

class Params {
 public:
  Params(const std::map<std::string, std::string>& raw, std::set<std::string> known, const std::string& name)
      : raw_(raw) {
    for (const auto& [k, v] : raw)
      if (!known.contains(k)) throw ConstructionError("unknown parameter '" + k + "' for " + name);
  }

  const std::string* get(const std::string& key) const {
    const auto it = raw_.find(key);
    return it == raw_.end() ? nullptr : &it->second;
  }
  const std::string& require(const std::string& key) const {
    if (const auto* v = get(key)) return *v;
    throw ConstructionError("missing parameter '" + key + "'");
  }

 private:
  const std::map<std::string, std::string>& raw_;
};

AuctionParams auction(const Params& p, const std::string& count_key, const std::string& values_key) {
  AuctionParams a;
  if (const auto* v = p.get(count_key)) a.bidders = integer(*v, count_key);
  a.values = parse_grid(p.require(values_key));
  if (const auto* v = p.get("prices")) a.prices = parse_grid(*v);
  if (const auto* v = p.get("step")) a.step = rational(*v, "step");
  if (const auto* v = p.get("order")) a.order = order(*v, "order");
  if (const auto* v = p.get("tie")) {
    if (*v == "lowest")
      a.tie = TiePolicy::kLowestIndex;
    else if (*v == "highest")
      a.tie = TiePolicy::kHighestIndex;
    else
      throw ConstructionError("tie must be lowest or highest");
  }
  if (const auto* v = p.get("boundary")) {
    if (*v == "continue")
      a.boundary = ClockBoundary::kContinueAtValue;
    else if (*v == "quit")
      a.boundary = ClockBoundary::kQuitAtValue;
    else
      throw ConstructionError("boundary must be continue or quit");
  }
  return a;
}

}  // namespace

std::vector<Rational> parse_grid(std::string_view text) {
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const Rational lo = rational(text.substr(0, dots), "grid bound");
    std::string_view rest = text.substr(dots + 2);
    Rational step(1);
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      step = rational(rest.substr(colon + 1), "grid step");
      rest = rest.substr(0, colon);
    }
    const Rational hi = rational(rest, "grid bound");
    if (step.sign() <= 0) throw ConstructionError("grid step must be positive");
    if (hi < lo) throw ConstructionError("empty grid " + std::string(text));
    if ((hi - lo) / step > Rational(static_cast<std::int64_t>(kMaxGrid)))
      throw ConstructionError("grid " + std::string(text) + " is too large");
    return arithmetic_grid(lo, hi, step);
  }
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(rational(text.substr(pos, end - pos), "grid value"));
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> mechanism_names() {
  return {"second-price", "ascending", "reverse-clock", "static-rp", "dynamic-rp", "double-auction"};
}

Mechanism generate(const std::string& name, const std::map<std::string, std::string>& raw) {
  if (name == "second-price" || name == "ascending") {
    const Params p(raw, {"bidders", "values", "prices", "step", "tie", "boundary", "order"}, name);
    const AuctionParams a = auction(p, "bidders", "values");
    if (name == "second-price") {
      if (p.get("boundary") || p.get("order") || p.get("step"))
        throw ConstructionError("second-price takes no clock parameters");
      return second_price(a);
    }
    return ascending(a);
  }
  if (name == "reverse-clock") {
    const Params p(raw, {"sellers", "costs", "prices", "step", "boundary", "order"}, name);
    return reverse_clock(auction(p, "sellers", "costs"));
  }
  if (name == "static-rp" || name == "dynamic-rp") {
    const Params p(raw, {"agents", "goods", "priority", "random-order"}, name);
    const int agents = integer(p.require("agents"), "agents");
    const int goods = p.get("goods") ? integer(*p.get("goods"), "goods") : agents;
    const std::vector<int> priority = p.get("priority") ? order(*p.get("priority"), "priority") : std::vector<int>{};
    const bool random = p.get("random-order") ? flag(*p.get("random-order"), "random-order") : false;
    return name == "static-rp" ? static_rp(agents, goods, priority, random) : dynamic_rp(agents, goods, priority, random);
  }
  if (name == "double-auction") {
    const Params p(raw, {"prices", "costs", "values", "alpha"}, name);
    TradeParams t;
    t.prices = parse_grid(p.require("prices"));
    t.costs = parse_grid(p.require("costs"));
    t.values = parse_grid(p.require("values"));
    if (const auto* v = p.get("alpha")) t.alpha = rational(*v, "alpha");
    return double_auction(t);
  }
  throw ConstructionError("unknown mechanism '" + name + "'");
}

}  // namespace mechsimp
