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

#include <gtest/gtest.h>

#include "minorient/error.h"
#include "minorient/orientability.h"
#include "minorient/triples.h"

namespace minorient {
namespace {

const LineMatroid& MacLane() {
  static const LineMatroid m = BuildGroupMatroid(GroupSpec::Parse("Z3"), {0}, {1});
  return m;
}

void ExpectCertificate(const LineMatroid& m, const SearchResult& r) {
  ASSERT_EQ(r.status, SearchStatus::kFound);
  ASSERT_TRUE(r.chirotope.has_value());
  EXPECT_TRUE(GpCheck(*r.chirotope).ok);
  EXPECT_TRUE(ZeroSetMatches(*r.chirotope, m));
}

// Oracle: enumerate every sign vector on the independent triples.
bool OracleOrientable(const LineMatroid& m) {
  const int n = m.size();
  std::vector<int64_t> free;
  for (int64_t r = 0; r < Choose3(n); ++r) {
    const auto t = TripleUnrank(r);
    if (!m.Dependent(t[0], t[1], t[2])) free.push_back(r);
  }
  EXPECT_LE(free.size(), 22u);
  for (uint64_t mask = 0; mask < (uint64_t{1} << free.size()); ++mask) {
    Chirotope chi(n);
    for (size_t b = 0; b < free.size(); ++b) chi.SetSorted(free[b], (mask >> b) & 1 ? 1 : -1);
    if (GpCheck(chi).ok) return true;
  }
  return false;
}

TEST(FindChirotopeTest, SmallMatroidsAgreeWithEnumeration) {
  const std::vector<LineMatroid> cases = {
      BuildMSigma(2, Permutation::Parse("(1 2)")),
      BuildMPrime(2),
      LineMatroid::Checked({"1", "2", "3", "4", "5", "6"},
                           {{"1", "2", "3"}, {"3", "4", "5"}, {"5", "6", "1"}, {"2", "4", "6"}}),
      LineMatroid::Checked({"1", "2", "3", "4", "5", "6"}, {{"1", "2", "3", "4"}}),
  };
  for (const auto& m : cases) {
    const auto r = FindChirotope(m);
    EXPECT_EQ(r.status == SearchStatus::kFound, OracleOrientable(m));
    if (r.status == SearchStatus::kFound) ExpectCertificate(m, r);
  }
}

TEST(FindChirotopeTest, Examples) {
  const auto m2 = BuildMSigma(2, Permutation::Parse("(1 2)"));
  ExpectCertificate(m2, FindChirotope(m2));
  const auto mac = FindChirotope(MacLane());
  EXPECT_EQ(mac.status, SearchStatus::kNone);
  EXPECT_FALSE(mac.chirotope.has_value());
  EXPECT_GT(mac.nodes, 0);
  const auto fig2 = BuildMSigma(4, Permutation::Parse("(1 3)(2 4)"));
  ExpectCertificate(fig2, FindChirotope(fig2));
}

TEST(FindChirotopeTest, AgreesWithCycleCriterionAllModes) {
  for (auto symmetry : {SymmetryBreaking::kFirstBasis, SymmetryBreaking::kReorientation}) {
    for (auto order : {BranchOrder::kLexicographic, BranchOrder::kColexicographic}) {
      SearchOptions opts;
      opts.symmetry = symmetry;
      opts.order = order;
      int rows = 0;
      for (int n = 2; n <= 4; ++n) {
        for (const auto& sigma : Derangements(n)) {
          const auto m = BuildMSigma(n, sigma);
          const auto r = FindChirotope(m, opts);
          ASSERT_NE(r.status, SearchStatus::kBudgetExhausted);
          EXPECT_EQ(r.status == SearchStatus::kFound, CriterionSigma(sigma).orientable)
              << sigma.ToCycleString();
          if (r.chirotope) ExpectCertificate(m, r);
          ++rows;
        }
      }
      EXPECT_EQ(rows, 12);
    }
  }
}

TEST(FindChirotopeTest, ParallelMatchesSequential) {
  SearchOptions opts;
  opts.workers = 4;
  EXPECT_EQ(FindChirotope(MacLane(), opts).status, SearchStatus::kNone);
  for (const auto& sigma : Derangements(5)) {
    const auto m = BuildMSigma(5, sigma);
    const auto r = FindChirotope(m, opts);
    EXPECT_EQ(r.status == SearchStatus::kFound, CriterionSigma(sigma).orientable);
    if (r.chirotope) ExpectCertificate(m, r);
  }
}

TEST(FindChirotopeTest, BudgetExhaustionIsDistinct) {
  SearchOptions opts;
  opts.budget = 2;
  const auto r = FindChirotope(MacLane(), opts);
  EXPECT_EQ(r.status, SearchStatus::kBudgetExhausted);
  EXPECT_LE(r.nodes, 2);
  EXPECT_EQ(ToString(r.status), "budget-exhausted");
  opts.workers = 3;
  EXPECT_EQ(FindChirotope(MacLane(), opts).status, SearchStatus::kBudgetExhausted);
}

TEST(FindChirotopeTest, Errors) {
  try {
    FindChirotope(BuildMSigma(7, Permutation::Parse("(1 2 3 4 5 6 7)")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "beyond desk scale");
  }
  const LineMatroid bad({"p", "q", "r", "s"}, {{"p", "q"}});
  try {
    FindChirotope(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("invalid matroid: ", 0), 0u);
  }
}

TEST(FindChirotopeTest, ReorientationClosureOfCertificates) {
  const auto m = BuildMSigma(4, Permutation::Parse("(1 2)(3 4)"));
  const auto r = FindChirotope(m);
  ASSERT_TRUE(r.chirotope);
  for (int e = 0; e < m.size(); ++e) {
    const auto re = r.chirotope->Reoriented(e);
    EXPECT_TRUE(GpCheck(re).ok);
    EXPECT_TRUE(ZeroSetMatches(re, m));
  }
}

TEST(MinimalityTest, MacLane) {
  const auto report = CertifyMinimalNonOrientable(MacLane());
  EXPECT_EQ(report.verdict, MinimalityVerdict::kMinimalNonOrientable);
  EXPECT_EQ(ToString(report.verdict), "minimal non-orientable");
  EXPECT_EQ(report.base.status, SearchStatus::kNone);
  ASSERT_EQ(report.deletions.size(), 8u);
  for (const auto& d : report.deletions) {
    ExpectCertificate(DeleteElement(MacLane(), d.element), d.result);
  }
}

TEST(MinimalityTest, OrientableAndEightCycle) {
  const auto fig2 = CertifyMinimalNonOrientable(BuildMSigma(4, Permutation::Parse("(1 3)(2 4)")));
  EXPECT_EQ(fig2.verdict, MinimalityVerdict::kOrientable);
  EXPECT_EQ(fig2.base.status, SearchStatus::kFound);

  const auto m = BuildMSigma(4, Permutation::Parse("(1 2 3 4)"));
  const auto report = CertifyMinimalNonOrientable(m);
  EXPECT_EQ(report.verdict, MinimalityVerdict::kMinimalNonOrientable);
  EXPECT_EQ(report.deletions.size(), 10u);
}

TEST(MinimalityTest, NotMinimalAndInconclusive) {
  // A 3-cycle plus a 2-cycle: deleting a_4 leaves the Mac Lane part intact.
  const auto m = BuildMSigma(5, Permutation::Parse("(1 2 3)(4 5)"));
  const auto report = CertifyMinimalNonOrientable(m);
  EXPECT_EQ(report.verdict, MinimalityVerdict::kNonOrientableNotMinimal);
  EXPECT_EQ(ToString(report.verdict), "non-orientable, not minimal");

  SearchOptions tiny;
  tiny.budget = 1;
  EXPECT_EQ(CertifyMinimalNonOrientable(MacLane(), tiny).verdict,
            MinimalityVerdict::kInconclusive);
}

}  // namespace
}  // namespace minorient
