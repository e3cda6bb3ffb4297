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

// Exercises the shared library through its C header only.

#include "mechsimp/mechsimp.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace {

struct Doc {
  msp_document* p = nullptr;
  ~Doc() { msp_document_free(p); }
};

struct Str {
  char* p = nullptr;
  ~Str() { msp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

msp_status gen(const char* name, std::vector<const char*> keys, std::vector<const char*> values, Doc& out) {
  return msp_generate(name, keys.data(), values.data(), keys.size(), &out.p);
}

bool contains(const std::string& haystack, const char* needle) { return haystack.find(needle) != std::string::npos; }

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(msp_version(), "1.0.0");
  EXPECT_STREQ(msp_status_name(MSP_OK), "ok");
  EXPECT_STREQ(msp_status_name(MSP_PARSE_ERROR), "parse error");
  EXPECT_STREQ(msp_status_name(static_cast<msp_status>(42)), "unknown status");
}

TEST(CApi, GenerateSerializeParse) {
  Doc d;
  ASSERT_EQ(gen("second-price", {"bidders", "values"}, {"2", "0,1,2"}, d), MSP_OK) << msp_last_error();
  Str text;
  ASSERT_EQ(msp_document_serialize(d.p, &text.p), MSP_OK);
  Doc back;
  ASSERT_EQ(msp_document_parse(text.p, std::strlen(text.p), &back.p), MSP_OK) << msp_last_error();
  Str again;
  ASSERT_EQ(msp_document_serialize(back.p, &again.p), MSP_OK);
  EXPECT_EQ(text.str(), again.str());

  Str summary;
  ASSERT_EQ(msp_document_summary(back.p, &summary.p), MSP_OK);
  EXPECT_TRUE(contains(summary.str(), "\"name\":\"second-price\"")) << summary.str();
}

TEST(CApi, CheckAndReplay) {
  Doc d;
  ASSERT_EQ(gen("second-price", {"values"}, {"0,1,2,3"}, d), MSP_OK) << msp_last_error();
  msp_check_options o;
  msp_check_options_init(&o);
  EXPECT_STREQ(o.criterion, "sp");

  int holds = -1;
  Str sp;
  ASSERT_EQ(msp_check(d.p, &o, &holds, &sp.p), MSP_OK) << msp_last_error();
  EXPECT_EQ(holds, 1);

  o.criterion = "osp";
  Str osp;
  ASSERT_EQ(msp_check(d.p, &o, &holds, &osp.p), MSP_OK);
  EXPECT_EQ(holds, 0);
  EXPECT_TRUE(contains(osp.str(), "\"kind\":\"bounds\"")) << osp.str();

  int reproduced = -1;
  ASSERT_EQ(msp_replay(d.p, osp.p, &reproduced), MSP_OK) << msp_last_error();
  EXPECT_EQ(reproduced, 1);
  EXPECT_EQ(msp_replay(d.p, "{\"kind\":\"bounds\"}", &reproduced), MSP_INVALID_ARGUMENT);
  EXPECT_STRNE(msp_last_error(), "");
}

TEST(CApi, ForesightAndBeliefOptions) {
  Doc d;
  ASSERT_EQ(gen("ascending", {"values"}, {"0,1,2"}, d), MSP_OK) << msp_last_error();
  msp_check_options o;
  msp_check_options_init(&o);
  int holds = -1;

  o.criterion = "f-simple";
  o.foresight = "one-step";
  Str one;
  ASSERT_EQ(msp_check(d.p, &o, &holds, &one.p), MSP_OK) << msp_last_error();
  EXPECT_EQ(holds, 1);
  o.foresight = "self";
  Str self;
  ASSERT_EQ(msp_check(d.p, &o, &holds, &self.p), MSP_OK);
  EXPECT_EQ(holds, 0);
  o.foresight = "sideways";
  Str bad;
  EXPECT_EQ(msp_check(d.p, &o, &holds, &bad.p), MSP_INVALID_ARGUMENT);
  EXPECT_EQ(bad.p, nullptr);

  o.foresight = nullptr;
  o.foresight_text = "gamedoc/1\nforesight nowhere\n";
  EXPECT_EQ(msp_check(d.p, &o, &holds, &bad.p), MSP_PARSE_ERROR);
  o.foresight_text = nullptr;

  o.criterion = "strategic";
  o.belief_text = "gamedoc/1\nbelief bidder1 sure 1 bidder2:v2\n";
  Str strategic;
  ASSERT_EQ(msp_check(d.p, &o, &holds, &strategic.p), MSP_OK) << msp_last_error();
  EXPECT_EQ(holds, 1);
  EXPECT_TRUE(contains(strategic.str(), "\"beliefs\":\"supplied\"")) << strategic.str();
  o.belief_text = "gamedoc/1\nbelief bidder1 sure 1/2 bidder2:v2\n";
  EXPECT_EQ(msp_check(d.p, &o, &holds, &bad.p), MSP_PARSE_ERROR);
}

TEST(CApi, ErrorCodes) {
  Doc d;
  EXPECT_EQ(msp_document_parse("gamedoc/1\nplayer\n", 18, &d.p), MSP_PARSE_ERROR);
  EXPECT_EQ(d.p, nullptr);
  EXPECT_EQ(std::string(msp_last_error()).rfind("2:", 0), 0u) << msp_last_error();

  EXPECT_EQ(gen("sealed-lottery", {}, {}, d), MSP_CONSTRUCTION_ERROR);
  EXPECT_EQ(gen("second-price", {"values", "values"}, {"1", "2"}, d), MSP_INVALID_ARGUMENT);
  EXPECT_EQ(msp_generate(nullptr, nullptr, nullptr, 0, &d.p), MSP_INVALID_ARGUMENT);

  ASSERT_EQ(gen("double-auction", {"prices", "costs", "values", "alpha"}, {"0,1,2", "1/2,3/2", "1/2,3/2", "1/2"}, d),
            MSP_OK)
      << msp_last_error();
  msp_check_options o;
  msp_check_options_init(&o);
  int holds = -1;
  Str r;
  o.criterion = "osp";
  EXPECT_EQ(msp_check(d.p, &o, &holds, &r.p), MSP_UNSUPPORTED);
  o.criterion = "sp";
  o.budget = 1;
  EXPECT_EQ(msp_check(d.p, &o, &holds, &r.p), MSP_BUDGET_EXCEEDED);
  o.budget = 0;
  o.criterion = "wgsp";
  o.coalition_size = -1;
  EXPECT_EQ(msp_check(d.p, &o, &holds, &r.p), MSP_INVALID_ARGUMENT);
  o.criterion = "magic";
  EXPECT_EQ(msp_check(d.p, &o, &holds, &r.p), MSP_INVALID_ARGUMENT);
  EXPECT_EQ(msp_check(nullptr, &o, &holds, &r.p), MSP_INVALID_ARGUMENT);
}

TEST(CApi, LastErrorIsPerThread) {
  Doc d;
  EXPECT_EQ(msp_document_parse("nonsense", 8, &d.p), MSP_PARSE_ERROR);
  const std::string mine = msp_last_error();
  std::string theirs = "unset";
  std::thread([&] { theirs = msp_last_error(); }).join();
  EXPECT_EQ(theirs, "");
  EXPECT_EQ(msp_last_error(), mine);
}

TEST(CApi, NullHandlesAreHarmless) {
  msp_document_free(nullptr);
  msp_string_free(nullptr);
  msp_check_options_init(nullptr);
}

}  // namespace
