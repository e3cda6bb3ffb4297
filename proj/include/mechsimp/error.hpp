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

#ifndef MECHSIMP_ERROR_HPP
#define MECHSIMP_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mechsimp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy or plan lacks an action where one is needed, or names an
// illegal action.
class MalformedStrategy : public Error {
 public:
  using Error::Error;
};

// Enumeration or search would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t limit)
      : Error(what + " (budget " + std::to_string(limit) + ")"), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

// Bad constructor parameters (grids, alpha, sizes).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Operation needs data the mechanism does not carry, e.g. truthful maps.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace mechsimp

#endif  // MECHSIMP_ERROR_HPP
