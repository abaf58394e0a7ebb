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

#include "minorient/gf.h"

#include <set>

#include <gtest/gtest.h>

#include "minorient/error.h"

namespace minorient {
namespace {

using Poly = std::vector<int>;  // constant term first

Poly MulPoly(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

std::vector<Poly> MonicOfDegree(int p, int d) {
  std::vector<Poly> out;
  int count = 1;
  for (int k = 0; k < d; ++k) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly poly(d + 1, 0);
    poly[d] = 1;
    int c = code;
    for (int k = 0; k < d; ++k) poly[k] = c % p, c /= p;
    out.push_back(poly);
  }
  return out;
}

// Oracle: the set of reducible monic polynomials of degree t is exactly the
// set of products of two monic polynomials of positive degree.
std::set<Poly> ReducibleMonic(int p, int t) {
  std::set<Poly> out;
  for (int d = 1; d < t; ++d) {
    for (const auto& f : MonicOfDegree(p, d)) {
      for (const auto& g : MonicOfDegree(p, t - d)) out.insert(MulPoly(f, g, p));
    }
  }
  return out;
}

// Lex-smallest monic irreducible, constant term compared first.
Poly OracleModulus(int p, int t) {
  const auto reducible = ReducibleMonic(p, t);
  std::vector<Poly> all = MonicOfDegree(p, t);
  std::sort(all.begin(), all.end());  // vector< compares index 0 first
  for (const auto& poly : all) {
    if (!reducible.count(poly)) return poly;
  }
  return {};
}

TEST(FieldSpecTest, ModulusExamples) {
  EXPECT_EQ(FieldSpec::Make(2, 2).modulus(), (Poly{1, 1, 1}));  // x^2 + x + 1
  EXPECT_EQ(FieldSpec::Make(5, 1).modulus(), (Poly{0, 1}));     // x
  EXPECT_EQ(FieldSpec::Make(3, 2).modulus(), (Poly{1, 0, 1}));  // x^2 + 1
}

TEST(FieldSpecTest, ModulusMatchesFactorizationOracle) {
  for (auto [p, t] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4},
                      {5, 2}, {5, 3}, {7, 2}}) {
    EXPECT_EQ(FieldSpec::Make(p, t).modulus(), OracleModulus(p, t)) << p << "^" << t;
  }
}

TEST(FieldSpecTest, IrreducibilityAgreesWithOracle) {
  for (auto [p, t] : {std::pair{2, 4}, {3, 4}, {2, 6}}) {
    const auto reducible = ReducibleMonic(p, t);
    for (const auto& poly : MonicOfDegree(p, t)) {
      EXPECT_EQ(IsIrreduciblePoly(p, poly), !reducible.count(poly));
    }
  }
}

TEST(FieldSpecTest, Errors) {
  EXPECT_THROW(FieldSpec::Make(4, 1), Error);
  EXPECT_THROW(FieldSpec::Make(1, 1), Error);
  EXPECT_THROW(FieldSpec::Make(2, 0), Error);
  EXPECT_THROW(FieldSpec::Make(2, 9), Error);
  try {
    FieldSpec::Make(9, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not prime");
  }
}

TEST(FieldSpecTest, HighDegreeFieldIsConstructible) {
  const auto spec = FieldSpec::Make(2, 8);
  EXPECT_EQ(spec.order(), 256);
  EXPECT_TRUE(IsIrreduciblePoly(2, spec.modulus()));
  EXPECT_EQ(MultiplicativeOrder(ElementOfOrder(spec, 255)), 255);
}

TEST(FieldElementTest, ArithmeticExamples) {
  const auto gf4 = FieldSpec::Make(2, 2);
  const auto w = FieldElement::Generator(gf4);
  EXPECT_EQ(w * w, w + FieldElement::One(gf4));
  EXPECT_EQ((w * w).ToString(), "w+1");

  const auto gf5 = FieldSpec::Make(5, 1);
  EXPECT_EQ(FieldElement::FromInt(gf5, 2).Inverse(), FieldElement::FromInt(gf5, 3));

  const auto gf27 = FieldSpec::Make(3, 3);
  for (const auto& x : FieldElement::All(gf27)) EXPECT_TRUE((x + (-x)).is_zero());
}

TEST(FieldElementTest, Errors) {
  const auto gf4 = FieldSpec::Make(2, 2);
  const auto gf5 = FieldSpec::Make(5, 1);
  try {
    FieldElement::Zero(gf4).Inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "zero has no inverse");
  }
  try {
    (void)(FieldElement::One(gf4) + FieldElement::One(gf5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "field mismatch");
  }
  // Same order, different characteristic data.
  EXPECT_THROW((void)(FieldElement::One(FieldSpec::Make(3, 2)) *
                      FieldElement::One(FieldSpec::Make(2, 3))),
               Error);
}

TEST(FieldElementTest, Rendering) {
  const auto gf9 = FieldSpec::Make(3, 2);
  EXPECT_EQ(FieldElement::FromIndex(gf9, 0).ToString(), "0");
  EXPECT_EQ(FieldElement::FromIndex(gf9, 2).ToString(), "2");
  EXPECT_EQ(FieldElement::FromIndex(gf9, 3).ToString(), "w");
  EXPECT_EQ(FieldElement::FromIndex(gf9, 8).ToString(), "2w+2");
  const auto gf8 = FieldSpec::Make(2, 3);
  EXPECT_EQ(FieldElement::FromIndex(gf8, 7).ToString(), "w^2+w+1");
  const auto gf7 = FieldSpec::Make(7, 1);
  EXPECT_EQ(FieldElement::FromInt(gf7, -1).ToString(), "6");
}

TEST(FieldElementTest, CanonicalIndexRoundTrip) {
  const auto gf25 = FieldSpec::Make(5, 2);
  for (int64_t i = 0; i < gf25.order(); ++i) {
    EXPECT_EQ(FieldElement::FromIndex(gf25, i).index(), i);
  }
}

TEST(MultiplicativeOrderTest, Examples) {
  const auto gf4 = FieldSpec::Make(2, 2);
  EXPECT_EQ(MultiplicativeOrder(FieldElement::Generator(gf4)), 3);
  EXPECT_EQ(MultiplicativeOrder(FieldElement::One(gf4)), 1);
  EXPECT_EQ(MultiplicativeOrder(FieldElement::FromInt(FieldSpec::Make(7, 1), 2)), 3);
  try {
    MultiplicativeOrder(FieldElement::Zero(gf4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "zero has no order");
  }
}

TEST(MultiplicativeOrderTest, DividesGroupOrder) {
  for (auto [p, t] : {std::pair{2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 4}}) {
    const auto spec = FieldSpec::Make(p, t);
    bool cyclic = false;
    for (const auto& x : FieldElement::All(spec)) {
      if (x.is_zero()) continue;
      const int64_t k = MultiplicativeOrder(x);
      EXPECT_EQ((spec.order() - 1) % k, 0);
      EXPECT_TRUE(x.Pow(k).is_one());
      cyclic |= k == spec.order() - 1;
    }
    EXPECT_TRUE(cyclic) << spec.ToString();
  }
}

TEST(ElementOfOrderTest, Examples) {
  const auto gf4 = FieldSpec::Make(2, 2);
  EXPECT_EQ(ElementOfOrder(gf4, 3), FieldElement::Generator(gf4));
  const auto gf7 = FieldSpec::Make(7, 1);
  EXPECT_TRUE(ElementOfOrder(gf7, 1).is_one());

  // Canonical scan over GF(9) = GF(3)[w]/(w^2+1): 1, 2 and w have orders
  // 1, 2, 4; w+1 squares to 2w, and (2w)^2 = -4 = 2, so w+1 has order 8.
  const auto gf9 = FieldSpec::Make(3, 2);
  const auto g = ElementOfOrder(gf9, 8);
  EXPECT_EQ(g.ToString(), "w+1");
  std::set<int64_t> powers;
  for (int k = 0; k < 8; ++k) powers.insert(g.Pow(k).index());
  EXPECT_EQ(powers.size(), 8u);

  try {
    ElementOfOrder(gf7, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "order unavailable");
  }
}

TEST(FieldAxiomsTest, ExhaustiveSmallFields) {
  for (auto [p, t] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto spec = FieldSpec::Make(p, t);
    const auto all = FieldElement::All(spec);
    const auto zero = FieldElement::Zero(spec), one = FieldElement::One(spec);
    for (const auto& a : all) {
      EXPECT_EQ(a + zero, a);
      EXPECT_EQ(a * one, a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.Inverse()).is_one());
      for (const auto& b : all) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        for (const auto& c : all) {
          EXPECT_EQ((a + b) + c, a + (b + c));
          EXPECT_EQ((a * b) * c, a * (b * c));
          EXPECT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

}  // namespace
}  // namespace minorient
