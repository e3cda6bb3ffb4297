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

#include "mechsimp/mechsimp.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "mechsimp/error.hpp"
#include "mechsimp/gamedoc.hpp"
#include "mechsimp/generate.hpp"
#include "mechsimp/report.hpp"

struct msp_document {
  mechsimp::GameDoc doc;
};

namespace {

thread_local std::string last_error;

msp_status fail(msp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join_errors(const std::vector<mechsimp::ParseError>& errors) {
  std::string out;
  for (const auto& e : errors) out += (out.empty() ? "" : "\n") + e.str();
  return out;
}

// Maps library exceptions onto status codes.
template <class F>
msp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const mechsimp::BudgetExceeded& e) {
    return fail(MSP_BUDGET_EXCEEDED, e.what());
  } catch (const mechsimp::ConstructionError& e) {
    return fail(MSP_CONSTRUCTION_ERROR, e.what());
  } catch (const mechsimp::Unsupported& e) {
    return fail(MSP_UNSUPPORTED, e.what());
  } catch (const mechsimp::MalformedStrategy& e) {
    return fail(MSP_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MSP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(MSP_INTERNAL_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

const char* msp_version(void) { return "1.0.0"; }

const char* msp_status_name(msp_status status) {
  switch (status) {
    case MSP_OK:
      return "ok";
    case MSP_INVALID_ARGUMENT:
      return "invalid argument";
    case MSP_PARSE_ERROR:
      return "parse error";
    case MSP_BUDGET_EXCEEDED:
      return "budget exceeded";
    case MSP_CONSTRUCTION_ERROR:
      return "construction error";
    case MSP_UNSUPPORTED:
      return "unsupported";
    case MSP_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

const char* msp_last_error(void) { return last_error.c_str(); }

void msp_string_free(char* s) { std::free(s); }

msp_status msp_document_parse(const char* text, size_t length, msp_document** out) {
  return guarded([&] {
    if (!text || !out) return fail(MSP_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto parsed = mechsimp::parse_gamedoc(std::string_view(text, length));
    if (!parsed.ok()) return fail(MSP_PARSE_ERROR, join_errors(parsed.errors));
    *out = new msp_document{std::move(*parsed.value)};
    return MSP_OK;
  });
}

msp_status msp_generate(const char* mechanism, const char* const* keys, const char* const* values, size_t count,
                        msp_document** out) {
  return guarded([&] {
    if (!mechanism || !out || (count && (!keys || !values))) return fail(MSP_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    std::map<std::string, std::string> params;
    for (size_t k = 0; k < count; ++k) {
      if (!keys[k] || !values[k]) return fail(MSP_INVALID_ARGUMENT, "null parameter");
      if (!params.emplace(keys[k], values[k]).second)
        return fail(MSP_INVALID_ARGUMENT, std::string("parameter '") + keys[k] + "' given twice");
    }
    auto doc = std::make_unique<msp_document>();
    doc->doc.mechanism = mechsimp::generate(mechanism, params);
    *out = doc.release();
    return MSP_OK;
  });
}

msp_status msp_document_serialize(const msp_document* doc, char** out) {
  return guarded([&] {
    if (!doc || !out) return fail(MSP_INVALID_ARGUMENT, "null argument");
    *out = copy_out(mechsimp::serialize(doc->doc));
    return *out ? MSP_OK : fail(MSP_INTERNAL_ERROR, "out of memory");
  });
}

msp_status msp_document_summary(const msp_document* doc, char** out) {
  return guarded([&] {
    if (!doc || !out) return fail(MSP_INVALID_ARGUMENT, "null argument");
    const auto& mech = doc->doc.mechanism;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : mech.params) params[k] = v;
    nlohmann::json players = nlohmann::json::array();
    for (int p = 0; p < mech.num_players(); ++p)
      players.push_back({{"name", mech.tree.player_name(p)},
                         {"infosets", mech.tree.player_infosets(p).size()},
                         {"types", mech.types[p].size()},
                         {"truthful", mech.has_truthful(p)}});
    nlohmann::json j{{"name", mech.name},
                     {"params", params},
                     {"players", players},
                     {"nodes", mech.tree.num_nodes()},
                     {"infosets", mech.tree.num_infosets()},
                     {"outcomes", mech.tree.num_outcomes()},
                     {"foresight", doc->doc.foresight.has_value()},
                     {"beliefs", doc->doc.beliefs.size()}};
    *out = copy_out(j.dump());
    return *out ? MSP_OK : fail(MSP_INTERNAL_ERROR, "out of memory");
  });
}

void msp_document_free(msp_document* doc) { delete doc; }

void msp_check_options_init(msp_check_options* options) {
  if (!options) return;
  *options = msp_check_options{"sp", 0, nullptr, nullptr, nullptr, 0};
}

msp_status msp_check(const msp_document* doc, const msp_check_options* options, int* holds, char** report) {
  return guarded([&] {
    if (!doc || !options || !holds || !report) return fail(MSP_INVALID_ARGUMENT, "null argument");
    *report = nullptr;
    mechsimp::CheckOptions opt;
    const auto criterion = mechsimp::parse_criterion(options->criterion ? options->criterion : "");
    if (!criterion)
      return fail(MSP_INVALID_ARGUMENT, std::string("unknown criterion '") + (options->criterion ? options->criterion : "") + "'");
    opt.criterion = *criterion;
    if (options->coalition_size < 0) return fail(MSP_INVALID_ARGUMENT, "coalition size must be positive");
    opt.coalition_size = options->coalition_size ? options->coalition_size : 2;
    opt.budget = options->budget;
    const auto& mech = doc->doc.mechanism;
    if (options->foresight_text) {
      auto parsed = mechsimp::parse_foresight(options->foresight_text, mech.tree);
      if (!parsed.ok()) return fail(MSP_PARSE_ERROR, "foresight: " + join_errors(parsed.errors));
      opt.foresight = std::move(*parsed.value);
    } else if (options->foresight) {
      const auto preset = mechsimp::parse_preset(options->foresight);
      if (!preset) return fail(MSP_INVALID_ARGUMENT, std::string("unknown foresight preset '") + options->foresight + "'");
      opt.foresight = mechsimp::ForesightSpec(*preset);
    }
    if (options->belief_text) {
      auto parsed = mechsimp::parse_beliefs(options->belief_text, mech);
      if (!parsed.ok()) return fail(MSP_PARSE_ERROR, "beliefs: " + join_errors(parsed.errors));
      opt.beliefs = std::move(*parsed.value);
    }
    const auto result = mechsimp::run_check(doc->doc, opt);
    *report = copy_out(result.json);
    if (!*report) return fail(MSP_INTERNAL_ERROR, "out of memory");
    *holds = result.holds ? 1 : 0;
    return MSP_OK;
  });
}

msp_status msp_replay(const msp_document* doc, const char* witness_json, int* reproduced) {
  return guarded([&] {
    if (!doc || !witness_json || !reproduced) return fail(MSP_INVALID_ARGUMENT, "null argument");
    const auto& mech = doc->doc.mechanism;
    *reproduced = mechsimp::replay(mech, mechsimp::witness_from_json(mech, witness_json)) ? 1 : 0;
    return MSP_OK;
  });
}

}  // extern "C"
