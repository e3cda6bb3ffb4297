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

#ifndef MECHSIMP_BUDGET_HPP
#define MECHSIMP_BUDGET_HPP

#include <cstdint>

#include "mechsimp/error.hpp"

namespace mechsimp {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// 10^7 unless SIMPLICITY_BUDGET holds a positive integer.
std::uint64_t default_budget();

// Counts payoff evaluations for one certifier run. Exceeding the limit
// throws; results are never silently truncated.
class Budget {
 public:
  Budget() : limit_(default_budget()) {}
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded("enumeration budget exceeded", limit_);
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace mechsimp

#endif  // MECHSIMP_BUDGET_HPP
