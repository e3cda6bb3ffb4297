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

#include "joint_search.hpp"

namespace mechsimp::detail {

bool JointSearch::run(std::span<const Track> tracks, const Visit& visit) {
  tracks_ = tracks;
  visit_ = &visit;
  std::vector<Pending> pending;
  for (int k = static_cast<int>(tracks.size()) - 1; k >= 0; --k) pending.push_back({k, tracks[k].start, Rational(1)});
  return explore(std::move(pending), {});
}

bool JointSearch::explore(std::vector<Pending> pending, std::vector<Arrival> done) {
  while (!pending.empty()) {
    Pending& p = pending.back();
    const Node& node = tree_.node(p.node);
    if (node.kind == NodeKind::kTerminal) {
      done.push_back({p.track, p.node, p.weight});
      pending.pop_back();
      continue;
    }
    const Step step = tracks_[p.track].policy(p.node);
    if (step.kind == Step::kFollow) {
      p.node = node.children[step.value];
      continue;
    }
    if (step.kind == Step::kSplit) {
      const Pending from = p;
      pending.pop_back();
      for (std::size_t k = node.children.size(); k-- > 0;)
        if (node.probs[k].sign() != 0) pending.push_back({from.track, node.children[k], from.weight * node.probs[k]});
      continue;
    }
    if (assignment_[step.value] >= 0) {
      p.node = node.children[assignment_[step.value]];
      continue;
    }
    const int choices = static_cast<int>(node.children.size());
    for (int a = 0; a < choices; ++a) {
      budget_.charge();
      assignment_[step.value] = a;
      if (!explore(pending, done)) {
        assignment_[step.value] = -1;
        return false;
      }
    }
    assignment_[step.value] = -1;
    return true;
  }
  budget_.charge();
  return (*visit_)(assignment_, done);
}

}  // namespace mechsimp::detail
