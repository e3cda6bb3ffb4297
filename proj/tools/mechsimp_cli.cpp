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

// mechsimp gen | check | validate | replay
//
// Exit status: 0 when every checked criterion holds, 1 when one fails,
// 2 on any error.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mechsimp/mechsimp.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

// Owns a document handle.
struct Document {
  msp_document* handle = nullptr;
  Document() = default;
  Document(const Document&) = delete;
  Document& operator=(const Document&) = delete;
  ~Document() { msp_document_free(handle); }
};

// Owns a library string.
struct Text {
  char* data = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { msp_string_free(data); }
  std::string str() const { return data ? data : ""; }
};

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void diag(const std::string& where, const std::string& message) {
  std::istringstream lines(message);
  std::string line;
  bool any = false;
  while (std::getline(lines, line)) {
    std::cerr << "mechsimp: " << where << ": " << line << "\n";
    any = true;
  }
  if (!any) std::cerr << "mechsimp: " << where << ": error\n";
}

bool load(const std::string& path, Document& doc) {
  const auto text = slurp(path);
  if (!text) {
    diag(path, "cannot read file");
    return false;
  }
  if (msp_document_parse(text->data(), text->size(), &doc.handle) != MSP_OK) {
    diag(path, msp_last_error());
    return false;
  }
  return true;
}

struct GenArgs {
  std::string mechanism;
  std::vector<std::pair<std::string, std::string>> params;
  bool random_order = false;
  std::string output;
};

int run_gen(GenArgs& args) {
  std::vector<const char*> keys, values;
  for (const auto& [k, v] : args.params) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  if (args.random_order) {
    keys.push_back("random-order");
    values.push_back("true");
  }
  Document doc;
  if (msp_generate(args.mechanism.c_str(), keys.data(), values.data(), keys.size(), &doc.handle) != MSP_OK) {
    diag("gen", msp_last_error());
    return kError;
  }
  Text text;
  if (msp_document_serialize(doc.handle, &text.data) != MSP_OK) {
    diag("gen", msp_last_error());
    return kError;
  }
  if (args.output.empty() || args.output == "-") {
    std::cout << text.str();
    return std::cout ? 0 : kError;
  }
  std::ofstream out(args.output, std::ios::binary);
  out << text.str();
  if (!out) {
    diag(args.output, "cannot write file");
    return kError;
  }
  return 0;
}

struct CheckArgs {
  std::vector<std::string> files;
  std::string criterion;
  int coalition_size = 2;
  std::string foresight;
  std::string belief;
  std::uint64_t budget = 0;
  int jobs = 1;
};

struct CheckOutcome {
  int code = kError;
  std::string report;
  std::string error;
};

CheckOutcome check_one(const std::string& file, const CheckArgs& args, const std::optional<std::string>& foresight_text,
                       const std::optional<std::string>& belief_text, const std::string& stdin_text) {
  CheckOutcome out;
  Document doc;
  const std::optional<std::string> text = file == "-" ? std::optional(stdin_text) : slurp(file);
  if (!text) {
    out.error = "cannot read file";
    return out;
  }
  if (msp_document_parse(text->data(), text->size(), &doc.handle) != MSP_OK) {
    out.error = msp_last_error();
    return out;
  }
  msp_check_options opt;
  msp_check_options_init(&opt);
  opt.criterion = args.criterion.c_str();
  opt.coalition_size = args.coalition_size;
  opt.budget = args.budget;
  if (foresight_text)
    opt.foresight_text = foresight_text->c_str();
  else if (!args.foresight.empty())
    opt.foresight = args.foresight.c_str();
  if (belief_text) opt.belief_text = belief_text->c_str();
  int holds = 0;
  Text report;
  if (msp_check(doc.handle, &opt, &holds, &report.data) != MSP_OK) {
    out.error = msp_last_error();
    return out;
  }
  nlohmann::json j = nlohmann::json::parse(report.str());
  j["source"] = file;
  out.report = j.dump();
  out.code = holds ? kHolds : kFails;
  return out;
}

int run_check(CheckArgs& args) {
  std::optional<std::string> foresight_text, belief_text;
  if (!args.foresight.empty() && args.foresight != "full" && args.foresight != "self" && args.foresight != "one-step") {
    foresight_text = slurp(args.foresight);
    if (!foresight_text) {
      diag(args.foresight, "cannot read foresight file");
      return kError;
    }
  }
  if (args.belief == "builtin") {
    belief_text = "gamedoc/1\n";
  } else if (!args.belief.empty()) {
    belief_text = slurp(args.belief);
    if (!belief_text) {
      diag(args.belief, "cannot read belief file");
      return kError;
    }
  }
  std::string stdin_text;
  if (std::count(args.files.begin(), args.files.end(), "-") > 0)
    stdin_text.assign(std::istreambuf_iterator<char>(std::cin), {});

  std::vector<CheckOutcome> outcomes(args.files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < args.files.size(); k = next++)
      outcomes[k] = check_one(args.files[k], args, foresight_text, belief_text, stdin_text);
  };
  const int jobs = std::max(1, std::min<int>(args.jobs, static_cast<int>(args.files.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kHolds;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (!outcomes[k].report.empty()) std::cout << outcomes[k].report << "\n";
    if (!outcomes[k].error.empty()) diag(args.files[k], outcomes[k].error);
    code = std::max(code, outcomes[k].code);
  }
  std::cout.flush();
  return code;
}

int run_validate(const std::string& file) {
  Document doc;
  if (!load(file, doc)) return kFails;
  Text summary;
  if (msp_document_summary(doc.handle, &summary.data) != MSP_OK) {
    diag(file, msp_last_error());
    return kError;
  }
  nlohmann::json j = nlohmann::json::parse(summary.str());
  j["source"] = file;
  j["valid"] = true;
  std::cout << j.dump() << "\n";
  return kHolds;
}

int run_replay(const std::string& file, const std::string& witness_file) {
  Document doc;
  if (!load(file, doc)) return kError;
  const auto witness = slurp(witness_file);
  if (!witness) {
    diag(witness_file, "cannot read file");
    return kError;
  }
  // Either one JSON document or a stream of report lines.
  std::vector<std::string> items;
  if (nlohmann::json::accept(*witness)) {
    items.push_back(*witness);
  } else {
    std::istringstream lines(*witness);
    std::string line;
    while (std::getline(lines, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) items.push_back(line);
  }
  std::erase_if(items, [](const std::string& item) {
    const auto j = nlohmann::json::parse(item, nullptr, false);
    return j.is_object() && j.contains("witness") && j.at("witness").is_null();
  });
  if (items.empty()) {
    diag(witness_file, "no witness found");
    return kError;
  }
  int code = kHolds;
  for (const std::string& item : items) {
    int ok = 0;
    if (msp_replay(doc.handle, item.c_str(), &ok) != MSP_OK) {
      diag(witness_file, msp_last_error());
      return kError;
    }
    std::cout << nlohmann::json{{"source", file}, {"witness", witness_file}, {"reproduced", ok == 1}}.dump() << "\n";
    if (!ok) code = kFails;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify simplicity properties of finite extensive-form mechanisms."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(msp_version()));

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write the game document of a built-in mechanism");
  g->add_option("mechanism", gen.mechanism, "second-price, ascending, reverse-clock, static-rp, dynamic-rp, double-auction")
      ->required();
  static const std::vector<std::pair<std::string, std::string>> gen_flags = {
      {"bidders", "Number of bidders"},
      {"sellers", "Number of sellers (reverse-clock)"},
      {"values", "Value grid: a..b[:step] or a comma list"},
      {"costs", "Cost grid: a..b[:step] or a comma list"},
      {"prices", "Bid, clock or offer grid"},
      {"step", "Required clock increment"},
      {"tie", "lowest or highest"},
      {"boundary", "continue or quit at price equal to value"},
      {"order", "Clock asking order, 1-based comma list"},
      {"agents", "Number of agents (random priority)"},
      {"goods", "Number of goods (random priority)"},
      {"priority", "Priority order, 1-based comma list"},
      {"alpha", "Double auction price weight in [0,1]"},
  };
  std::vector<std::string> gen_values(gen_flags.size());
  std::vector<CLI::Option*> gen_options;
  for (std::size_t k = 0; k < gen_flags.size(); ++k)
    gen_options.push_back(g->add_option("--" + gen_flags[k].first, gen_values[k], gen_flags[k].second));
  g->add_flag("--random-order", gen.random_order, "Draw the priority order at a chance node");
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Run a certifier and print one JSON report per file");
  c->add_option("files", check.files, "Game documents; - reads stdin")->required();
  c->add_option("--criterion", check.criterion, "sp, osp, wgsp, strong-osp, one-step, f-simple, strategic")
      ->required()
      ->check(CLI::IsMember({"sp", "osp", "wgsp", "strong-osp", "one-step", "f-simple", "strategic"}));
  c->add_option("--coalition-size", check.coalition_size, "Largest coalition for wgsp")->check(CLI::PositiveNumber);
  c->add_option("--foresight", check.foresight, "full, self, one-step or a foresight document");
  c->add_option("--belief", check.belief, "builtin or a belief document");
  c->add_option("--budget", check.budget, "Evaluation budget (default 10^7 or SIMPLICITY_BUDGET)");
  c->add_option("--jobs", check.jobs, "Files checked in parallel")->check(CLI::PositiveNumber);

  std::string validate_file;
  auto* v = app.add_subcommand("validate", "Parse and validate a game document");
  v->add_option("file", validate_file, "Game document; - reads stdin")->required();

  std::string replay_file, witness_file;
  auto* r = app.add_subcommand("replay", "Re-evaluate the witnesses of check reports");
  r->add_option("file", replay_file, "Game document")->required();
  r->add_option("--witness", witness_file, "Report stream or witness JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  if (*g) {
    for (std::size_t k = 0; k < gen_flags.size(); ++k)
      if (gen_options[k]->count()) gen.params.emplace_back(gen_flags[k].first, gen_values[k]);
    return run_gen(gen);
  }
  if (*c) return run_check(check);
  if (*v) return run_validate(validate_file);
  return run_replay(replay_file, witness_file);
}
