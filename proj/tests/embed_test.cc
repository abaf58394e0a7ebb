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

#include "minorient/embed.h"

#include <gtest/gtest.h>

#include "minorient/error.h"
#include "minorient/families.h"

namespace minorient {
namespace {

// Oracle for prime fields: integer determinant reduced mod p.
bool OracleEmbeds(const EmbeddingInstance& inst) {
  const int64_t p = inst.spec.p();
  const auto& m = inst.matroid;
  std::vector<std::array<int64_t, 3>> v;
  for (const auto& e : m.elements()) {
    const auto& pt = inst.map.at(e);
    v.push_back({pt[0].index(), pt[1].index(), pt[2].index()});
  }
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      if (v[i] == v[j]) return false;
      for (int k = j + 1; k < m.size(); ++k) {
        const auto &a = v[i], &b = v[j], &c = v[k];
        int64_t d = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]);
        d = ((d % p) + p) % p;
        if ((d == 0) != m.Dependent(i, j, k)) return false;
      }
    }
  }
  return true;
}

TEST(PsiPrimeTest, EmbedsForSmallPrimes) {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto inst = PsiPrime(p);
    EXPECT_EQ(inst.matroid.size(), 2 * p + 2);
    const auto check = VerifyEmbedding(inst);
    EXPECT_TRUE(check.ok) << p << ": " << check.diagnostic;
    EXPECT_TRUE(OracleEmbeds(inst));
  }
}

TEST(PsiPrimeTest, ImageOfAOnLineXZero) {
  const auto inst = PsiPrime(5);
  const ProjLine x0 = MakeLine(inst.spec, 1, 0, 0);
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(Incident(inst.map.at(ElementA(i)), x0));
  EXPECT_EQ(inst.map.at("a_2").ToString(), "[0,1,3]");  // [0,2,1] scaled by 3
}

TEST(PsiPrimeTest, Errors) {
  EXPECT_THROW(PsiPrime(4), Error);
  try {
    PsiPrime(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "Mac Lane needs p >= 3");
  }
}

TEST(PsiPrimeTest, MovedC1IsRejected) {
  auto inst = PsiPrime(3);
  inst.map.at("c_1") = MakePoint(inst.spec, 1, 2, 0);
  const auto check = VerifyEmbedding(inst);
  EXPECT_FALSE(check.ok);
  ASSERT_TRUE(check.violation.has_value());
  EXPECT_FALSE(check.diagnostic.empty());
  EXPECT_FALSE(OracleEmbeds(inst));
}

TEST(PsiSubgroupTest, Instances) {
  for (auto [m, p, t] : {std::tuple{3, 2, 2}, {4, 5, 1}, {8, 3, 2}, {5, 11, 1}, {13, 3, 3},
                         {7, 2, 3}, {5, 2, 4}}) {
    const auto inst = PsiSubgroup(m, p, t);
    EXPECT_EQ(inst.matroid.size(), 2 * m + 2);
    EXPECT_EQ(inst.spec.order() % p, 0);
    const auto check = VerifyEmbedding(inst);
    EXPECT_TRUE(check.ok) << m << "," << p << "," << t << ": " << check.diagnostic;
    if (t == 1) EXPECT_TRUE(OracleEmbeds(inst));
  }
}

TEST(PsiSubgroupTest, Errors) {
  try {
    PsiSubgroup(5, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "subgroup does not exist");
  }
  EXPECT_THROW(PsiSubgroup(2, 3, 1), Error);
  EXPECT_THROW(PsiSubgroup(3, 6, 1), Error);
}

TEST(ObstructionTest, Examples) {
  const auto z8 = BuildGroupMatroid(GroupSpec::Parse("Z8"), {0}, {1});
  const auto z3 = BuildGroupMatroid(GroupSpec::Parse("Z3"), {0}, {1});
  EXPECT_EQ(Obstruction(z8, 3), "line too long");
  EXPECT_EQ(Obstruction(z3, 2), "ground set too large");
  EXPECT_EQ(Obstruction(z3, 3), std::nullopt);
  EXPECT_EQ(Obstruction(z8, 9), std::nullopt);
}

TEST(ComplexCheckTest, PassesForSmallN) {
  for (int n = 3; n <= 12; ++n) {
    const auto r = ComplexCheck(n);
    EXPECT_TRUE(r.ok) << n;
    EXPECT_LT(r.max_dependent_residual, 1e-9);
    EXPECT_GT(r.min_independent_det, 1e-6);
    const int64_t N = 2 * n + 2;
    EXPECT_EQ(r.triples_scanned, N * (N - 1) * (N - 2) / 6);
  }
}

TEST(ComplexCheckTest, PerturbationFails) {
  EXPECT_FALSE(ComplexCheck(4, 1e-9, 1e-6, 0.1).ok);
  EXPECT_THROW(ComplexCheck(2), Error);
  try {
    ComplexCheck(4, 1e-3, 1e-6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "tolerance order");
  }
}

}  // namespace
}  // namespace minorient
