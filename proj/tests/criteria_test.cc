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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "minorient/error.h"
#include "minorient/orientability.h"

namespace minorient {
namespace {

TEST(CriterionSigmaTest, Examples) {
  EXPECT_TRUE(CriterionSigma(Permutation::Parse("(1 3)(2 4)")).orientable);
  EXPECT_FALSE(CriterionSigma(Permutation::Parse("(1 2 3)")).orientable);
  EXPECT_TRUE(CriterionSigma(Permutation::Parse("(1 2)")).orientable);
  EXPECT_EQ(CriterionSigma(Permutation::Parse("(1 2)(3 4 5)")).cycle_lengths,
            (std::vector<int>{4, 6}));
}

TEST(CriterionGroupTest, Examples) {
  const auto z3 = CriterionGroup(GroupSpec::Parse("Z3"), {0}, {1});
  EXPECT_EQ(z3.r, 3);
  EXPECT_FALSE(z3.orientable);
  const auto z4 = CriterionGroup(GroupSpec::Parse("Z4"), {0}, {2});
  EXPECT_EQ(z4.r, 2);
  EXPECT_TRUE(z4.orientable);
  EXPECT_THROW(CriterionGroup(GroupSpec::Parse("Z4"), {1}, {1}), Error);
}

// Direct reading of the S+/S- partition around the middle vertex.
bool OracleTripleFeasible(int i1, int j1, int i2, int j2, int i3, int j3) {
  const int s1 = (i1 - i2) * (j1 - j2);
  const int s3 = (i3 - i2) * (j3 - j2);
  return (s1 > 0 && s3 > 0) || (s1 < 0 && s3 < 0);
}

TEST(ExtensionFeasibleTest, TriplesMatchPartitionOracle) {
  for (int n = 3; n <= 6; ++n) {
    int64_t checked = 0;
    for (int i1 = 1; i1 <= n; ++i1) {
      for (int i2 = i1 + 1; i2 <= n; ++i2) {
        for (int i3 = i2 + 1; i3 <= n; ++i3) {
          for (int j1 = 1; j1 <= n; ++j1) {
            for (int j2 = 1; j2 <= n; ++j2) {
              for (int j3 = 1; j3 <= n; ++j3) {
                if (j1 == j2 || j2 == j3 || j1 == j3) continue;
                const std::map<int, int> f = {{i1, j1}, {i2, j2}, {i3, j3}};
                EXPECT_EQ(ExtensionFeasible(n, f), OracleTripleFeasible(i1, j1, i2, j2, i3, j3));
                ++checked;
              }
            }
          }
        }
      }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(ExtensionFeasibleTest, CyclicPermutations) {
  for (int n = 2; n <= 7; ++n) {
    // Every cyclic permutation: 1 followed by an ordering of 2..n.
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 2);
    do {
      std::vector<int> orbit = {1};
      orbit.insert(orbit.end(), rest.begin(), rest.end());
      std::map<int, int> f;
      for (int k = 0; k < n; ++k) f[orbit[k]] = orbit[(k + 1) % n];
      EXPECT_EQ(ExtensionFeasible(n, f), n == 2);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

TEST(ExtensionFeasibleTest, Examples) {
  EXPECT_FALSE(ExtensionFeasible(3, {{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_TRUE(ExtensionFeasible(4, {{1, 2}, {2, 3}}));
  EXPECT_FALSE(ExtensionFeasible(3, {{1, 3}, {2, 1}, {3, 2}}));
  EXPECT_TRUE(ExtensionFeasible(5, {}));
  EXPECT_TRUE(ExtensionFeasible(5, {{3, 3}}));
  try {
    ExtensionFeasible(4, {{1, 2}, {3, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not injective");
  }
  EXPECT_THROW(ExtensionFeasible(3, {{4, 1}}), Error);
}

TEST(ExtensionFeasibleTest, ReversalSymmetry) {
  const int n = 6;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    for (int mask = 1; mask < (1 << n); mask += 5) {
      std::map<int, int> f, reversed;
      for (int i = 1; i <= n; ++i) {
        if (!((mask >> (i - 1)) & 1)) continue;
        f[i] = images[i - 1];
        reversed[n + 1 - i] = images[i - 1];
      }
      EXPECT_EQ(ExtensionFeasible(n, f), ExtensionFeasible(n, reversed));
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace
}  // namespace minorient
