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

// Orientability of rank-3 line matroids.
//
// Two independent routes: closed-form criteria on the permutation / group
// data, and an exhaustive backtracking search for a chirotope whose zero set
// is the matroid's dependent triples.

#ifndef MINORIENT_ORIENTABILITY_H_
#define MINORIENT_ORIENTABILITY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorient/chirotope.h"
#include "minorient/families.h"
#include "minorient/matroid.h"

namespace minorient {

struct SigmaCriterion {
  std::vector<int> cycle_lengths;  // of the sigma graph, sorted
  bool orientable = false;
};

// Orientable iff no cycle of the sigma graph is longer than four.
SigmaCriterion CriterionSigma(const Permutation& sigma);

struct GroupCriterion {
  int64_t r = 0;  // additive order of g0 - g1
  bool orientable = false;
};

// Orientable iff r <= 2. Errors: "need two distinct group elements".
GroupCriterion CriterionGroup(const GroupSpec& group, const GroupSpec::Element& g0,
                              const GroupSpec::Element& g1);

inline constexpr int kMaxSearchElements = 14;
inline constexpr int64_t kDefaultBudget = 10'000'000;

enum class SymmetryBreaking {
  // Fix the first basis triple to +1 (breaks global negation only).
  kFirstBasis,
  // Fix one triple per element, which picks a representative of every
  // reorientation class.
  kReorientation,
};

enum class BranchOrder {
  // Sorted triples in lexicographic order.
  kLexicographic,
  // Triples ordered by their largest element, so the search extends the
  // chirotope one element at a time.
  kColexicographic,
};

struct SearchOptions {
  int64_t budget = kDefaultBudget;  // decision nodes
  int workers = 1;
  SymmetryBreaking symmetry = SymmetryBreaking::kReorientation;
  BranchOrder order = BranchOrder::kLexicographic;
};

enum class SearchStatus { kFound, kNone, kBudgetExhausted };

std::string_view ToString(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<Chirotope> chirotope;
  int64_t nodes = 0;
  double wall_ms = 0;
};

// Errors: "beyond desk scale" for more than 14 elements; the validation
// diagnostic for invalid matroids.
SearchResult FindChirotope(const LineMatroid& m, const SearchOptions& options = {});

enum class MinimalityVerdict {
  kMinimalNonOrientable,
  kOrientable,
  kNonOrientableNotMinimal,
  kInconclusive,
};

std::string_view ToString(MinimalityVerdict verdict);

struct DeletionCertificate {
  std::string element;
  SearchResult result;
};

struct MinimalityReport {
  SearchResult base;
  std::vector<DeletionCertificate> deletions;
  MinimalityVerdict verdict = MinimalityVerdict::kInconclusive;
};

MinimalityReport CertifyMinimalNonOrientable(const LineMatroid& m,
                                             const SearchOptions& options = {});

// Whether F(n) extends by a pseudoline through X_{i, f(i)} for i in the
// domain of f: true iff f is increasing or decreasing.
// Errors: "not injective", "out of range".
bool ExtensionFeasible(int n, const std::map<int, int>& f);

}  // namespace minorient

#endif  // MINORIENT_ORIENTABILITY_H_
