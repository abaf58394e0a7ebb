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

// Constructors for the matroid families built from two pencils of lines.
//
// Naming: M'(n) lives on a_1..a_n, b_1..b_n, c_0 with lines A = {a_i},
// B = {b_i} and X_i = {a_i, b_i, c_0}. M(n, sigma) adds c_1 and the lines
// {a_i, b_sigma(i), c_1}. The group matroid M(G, g0, g1) uses a_g, b_g,
// c_g0, c_g1 with lines {a_g, b_{g+g0}, c_g0} and {a_g, b_{g+g1}, c_g1}.

#ifndef MINORIENT_FAMILIES_H_
#define MINORIENT_FAMILIES_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "minorient/matroid.h"

namespace minorient {

// A bijection on {1..n}.
class Permutation {
 public:
  // `images[i - 1]` is the image of i. Errors: "not a permutation".
  explicit Permutation(std::vector<int> images);
  static Permutation Identity(int n);
  // Cycle notation such as "(1 3)(2 4)"; omitted points are fixed.
  // n = 0 infers the size from the largest point mentioned.
  // Errors: "bad cycle notation", "not a permutation".
  static Permutation Parse(std::string_view cycles, int n = 0);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation Inverse() const;
  bool IsDerangement() const;
  // Cycles in order of their smallest point, each starting at that point.
  std::vector<std::vector<int>> Cycles() const;
  std::vector<int> CycleLengths() const;  // sorted ascending
  // Fixed points omitted; identity renders as "()".
  std::string ToCycleString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// All fixed-point-free permutations of {1..n}, in lexicographic order of
// their image sequences.
std::vector<Permutation> Derangements(int n);

// The 2-regular bipartite graph on a_1..a_n, b_1..b_n with edges a_i b_i and
// a_i b_sigma(i).
struct CycleGraph {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 2>> edges;
  std::vector<std::vector<std::string>> cycles;
  std::vector<int> cycle_lengths;  // sorted ascending
};

// Errors: "sigma not a derangement".
CycleGraph SigmaGraph(const Permutation& sigma);

// Z_{d_1} x ... x Z_{d_k}, written additively.
class GroupSpec {
 public:
  // Errors: "bad group" (empty or some d_i < 2).
  explicit GroupSpec(std::vector<int> orders);
  // "Z3", "Z2xZ2", "Z2xZ4". Errors: "bad group".
  static GroupSpec Parse(std::string_view text);

  const std::vector<int>& orders() const { return orders_; }
  int64_t order() const;
  std::string ToString() const;

  using Element = std::vector<int>;
  // Lexicographic, first factor most significant.
  std::vector<Element> Elements() const;
  int64_t IndexOf(const Element& g) const;
  Element Add(const Element& g, const Element& h) const;
  Element Neg(const Element& g) const;
  int64_t OrderOf(const Element& g) const;
  // "2" for cyclic groups, "(1,0)" otherwise.
  std::string ElementName(const Element& g) const;
  // Accepts "1", "(1,0)", "1,0". Errors: "bad group element".
  Element ParseElement(std::string_view text) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<int> orders_;
};

// Errors: "n too small".
LineMatroid BuildMPrime(int n);
// Errors: "n too small", "size mismatch", "sigma not a derangement".
LineMatroid BuildMSigma(int n, const Permutation& sigma);
// Errors: "need two distinct group elements", "bad group element".
LineMatroid BuildGroupMatroid(const GroupSpec& group, const GroupSpec::Element& g0,
                              const GroupSpec::Element& g1);

struct GroupTranslation {
  int n = 0;
  Permutation sigma;
  // Names of BuildMSigma(n, sigma) -> names of BuildGroupMatroid.
  std::map<std::string, std::string> renaming;
};

// alpha enumerates the group lexicographically, beta(i) = alpha(i) + g0 and
// sigma(i) = beta^{-1}(alpha(i) + g1).
GroupTranslation GroupToSigma(const GroupSpec& group, const GroupSpec::Element& g0,
                              const GroupSpec::Element& g1);

// Relabeling placing X_i at infinity so that each 2-cycle {i, sigma(i)}
// lands on a mirror pair {k, n + 1 - k}.
// Errors: "tau requires an involution".
Permutation TauRelabel(int n, const Permutation& sigma);

// A line Ax + By + Cz = 0 of the rational projective plane. The affine line
// y = s x + t is (s, -1, t); the line at infinity is (0, 0, 1).
struct ArrangementLine {
  std::string name;
  std::array<int64_t, 3> coeffs;
};

struct Arrangement {
  std::vector<ArrangementLine> lines;
};

// Errors: "degenerate arrangement" when two lines are proportional.
void CheckArrangement(const Arrangement& arrangement);

// Straight-line realization of M(n, sigma) when every sigma-cycle has
// length two. Errors: "tau requires an involution".
Arrangement RealizeFourCycles(int n, const Permutation& sigma);

// Straight-line F(n, tau): a_i: y = tau(i) x, b_i: y = tau(i) x + 1, c_0 at
// infinity. Errors: "size mismatch".
Arrangement RealizeF(int n, const Permutation& tau);

std::string ElementA(int i);
std::string ElementB(int i);
std::string ElementC(int i);

}  // namespace minorient

#endif  // MINORIENT_FAMILIES_H_
