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

#ifndef MECHSIMP_GENERATE_HPP
#define MECHSIMP_GENERATE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mechsimp/mechanism.hpp"

namespace mechsimp {

// "a..b", "a..b:step" or a comma-separated list of rationals.
std::vector<Rational> parse_grid(std::string_view text);

// Builds a mechanism by constructor name from string parameters.
//
//   second-price, ascending   bidders values prices step tie boundary order
//   reverse-clock             sellers costs prices step boundary order
//   static-rp, dynamic-rp     agents goods priority random-order
//   double-auction            prices costs values alpha
//
// Orders and priorities list 1-based participants separated by commas.
// Unknown names or keys raise ConstructionError.
Mechanism generate(const std::string& name, const std::map<std::string, std::string>& params);

std::vector<std::string> mechanism_names();

}  // namespace mechsimp

#endif  // MECHSIMP_GENERATE_HPP
