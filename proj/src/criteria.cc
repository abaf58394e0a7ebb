// Copyright 2026 The Authors.
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

#include <set>

#include "minorient/error.h"
#include "minorient/orientability.h"

namespace minorient {

SigmaCriterion CriterionSigma(const Permutation& sigma) {
  SigmaCriterion out;
  out.cycle_lengths = SigmaGraph(sigma).cycle_lengths;
  out.orientable = out.cycle_lengths.empty() || out.cycle_lengths.back() <= 4;
  return out;
}

GroupCriterion CriterionGroup(const GroupSpec& group, const GroupSpec::Element& g0,
                              const GroupSpec::Element& g1) {
  if (g0 == g1) throw Error("need two distinct group elements");
  GroupCriterion out;
  out.r = group.OrderOf(group.Add(g0, group.Neg(g1)));
  out.orientable = out.r <= 2;
  return out;
}

bool ExtensionFeasible(int n, const std::map<int, int>& f) {
  std::set<int> images;
  for (const auto& [i, j] : f) {
    if (i < 1 || i > n || j < 1 || j > n) throw Error("out of range");
    if (!images.insert(j).second) throw Error("not injective");
  }
  bool increasing = true, decreasing = true;
  int prev = 0;
  bool first = true;
  // std::map iterates the domain in increasing order.
  for (const auto& [i, j] : f) {
    if (!first) {
      increasing &= j > prev;
      decreasing &= j < prev;
    }
    prev = j;
    first = false;
  }
  return increasing || decreasing;
}

}  // namespace minorient
