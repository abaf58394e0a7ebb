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

#include "minorient/io.h"

#include <gtest/gtest.h>

#include "minorient/error.h"

namespace minorient {
namespace {

TEST(MatroidJsonTest, RoundTrip) {
  const auto m = BuildGroupMatroid(GroupSpec::Parse("Z2xZ2"), {0, 0}, {1, 1});
  const Json j = MatroidToJson(m);
  EXPECT_TRUE(MatroidFromJson(j).SameStructure(m));
  EXPECT_TRUE(MatroidFromJson(Json::parse(j.dump())).SameStructure(m));
}

TEST(MatroidJsonTest, NaturalOrdering) {
  const Json j = MatroidToJson(BuildMPrime(10));
  const auto elements = j["elements"].get<std::vector<std::string>>();
  EXPECT_EQ(elements[1], "a_2");
  EXPECT_EQ(elements[9], "a_10");
  EXPECT_EQ(j["flats"][0][0], "a_1");
}

TEST(MatroidJsonTest, Rejects) {
  EXPECT_THROW(MatroidFromJson(Json::parse(R"({"elements": ["a"]})")), Error);
  EXPECT_THROW(MatroidFromJson(Json::parse(R"({"elements": [1], "flats": []})")), Error);
  try {
    MatroidFromJson(Json::parse(R"({"elements": ["p","q","r","s"], "flats": [["p","q"]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("invalid matroid: ", 0), 0u);
  }
}

TEST(ArrangementJsonTest, RoundTrip) {
  const auto arr = RealizeFourCycles(4, Permutation::Parse("(1 3)(2 4)"));
  const Json j = ArrangementToJson(arr);
  EXPECT_EQ(j[0]["name"], "a_1");
  EXPECT_EQ(j[0]["line"], Json::parse("[-1,-1,-1]"));
  const auto back = ArrangementFromJson(Json::parse(j.dump()));
  ASSERT_EQ(back.lines.size(), arr.lines.size());
  for (size_t i = 0; i < arr.lines.size(); ++i) {
    EXPECT_EQ(back.lines[i].name, arr.lines[i].name);
    EXPECT_EQ(back.lines[i].coeffs, arr.lines[i].coeffs);
  }
  EXPECT_THROW(ArrangementFromJson(Json::parse(R"([{"name": "x", "line": [1, 2]}])")), Error);
  EXPECT_THROW(ArrangementFromJson(Json::parse(R"([{"name": "x", "line": [1.5, 2, 0]}])")),
               Error);
}

TEST(ChirotopeJsonTest, RoundTrip) {
  const auto chi = ChirotopeOfArrangement(RealizeF(3, Permutation::Identity(3)));
  const Json j = ChirotopeToJson(chi);
  EXPECT_EQ(j.size(), 35u);
  EXPECT_TRUE(j.contains("0,1,2"));
  EXPECT_EQ(ChirotopeFromJson(j, 7), chi);
  EXPECT_THROW(ChirotopeFromJson(Json::parse(R"({"2,1,0": 1})"), 3), Error);
  EXPECT_THROW(ChirotopeFromJson(Json::parse(R"({"0,1,2": 2})"), 3), Error);
}

TEST(ReportJsonTest, SearchAndMinimality) {
  const auto m = BuildGroupMatroid(GroupSpec::Parse("Z3"), {0}, {1});
  const Json r = SearchResultToJson(FindChirotope(m), m);
  EXPECT_EQ(r["status"], "none");
  EXPECT_FALSE(r.contains("chirotope"));

  const auto report = CertifyMinimalNonOrientable(m);
  const Json j = MinimalityReportToJson(report, m);
  EXPECT_EQ(j["verdict"], "minimal non-orientable");
  EXPECT_EQ(j["deletion_certificates"], 8);
  EXPECT_EQ(j["deletions"].size(), 8u);
  const auto& first = j["deletions"][0];
  EXPECT_EQ(first["result"]["status"], "found");
  const auto elements = first["result"]["elements"].get<std::vector<std::string>>();
  EXPECT_EQ(elements.size(), 7u);
  const auto chi = ChirotopeFromJson(first["result"]["chirotope"], 7);
  EXPECT_TRUE(GpCheck(chi).ok);
}

TEST(ReportJsonTest, Embedding) {
  const auto inst = PsiPrime(3);
  const Json j = EmbeddingReportToJson(inst, VerifyEmbedding(inst));
  EXPECT_EQ(j["field"], "GF(3)");
  EXPECT_EQ(j["plane_order"], 3);
  EXPECT_EQ(j["verdict"], "embedding");
  EXPECT_EQ(j["map"]["a_1"], "[0,1,1]");
  EXPECT_TRUE(j["first_violation"].is_null());
}

TEST(ReadJsonFileTest, MissingFile) {
  EXPECT_THROW(ReadJsonFile("/nonexistent/matroid.json"), Error);
}

}  // namespace
}  // namespace minorient
