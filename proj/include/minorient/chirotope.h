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

// Rank-3 chirotopes: alternating sign maps on element triples.

#ifndef MINORIENT_CHIROTOPE_H_
#define MINORIENT_CHIROTOPE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorient/families.h"
#include "minorient/matroid.h"

namespace minorient {

class Chirotope {
 public:
  // All signs start at zero.
  explicit Chirotope(int n);

  int n() const { return n_; }
  // Alternating extension of the stored value on the sorted triple.
  int Sign(int i, int j, int k) const;
  // Stores `sign` for the ordered triple (i, j, k).
  void Set(int i, int j, int k, int sign);

  int SortedSign(int64_t rank) const { return signs_[rank]; }
  void SetSorted(int64_t rank, int sign) { signs_[rank] = static_cast<int8_t>(sign); }
  int64_t num_triples() const { return static_cast<int64_t>(signs_.size()); }

  bool HasNonzero() const;
  // Negates every triple containing `element`.
  Chirotope Reoriented(int element) const;
  // Chirotope on the listed elements, renumbered 0..k-1 in the given order.
  Chirotope Restricted(const std::vector<int>& keep) const;

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  int n_;
  std::vector<int8_t> signs_;  // by TripleRank
};

struct GpViolation {
  // a is the pivot; b < c < d < e are the other four elements.
  std::array<int, 5> elements;
  std::array<int, 3> products;
};

struct GpCheckResult {
  bool ok = true;
  std::optional<GpViolation> violation;
  int64_t relations_checked = 0;
};

// Three-term Grassmann-Pluecker sign condition: for every a and every
// b < c < d < e distinct from a, the nonzero members of
//   { X(abc)X(ade), -X(abd)X(ace), X(abe)X(acd) }
// are either absent or include both signs.
GpCheckResult GpCheck(const Chirotope& chi);

// True iff chi(T) == 0 exactly for the dependent triples of `m`. Element i
// of the chirotope is element i of `m`.
bool ZeroSetMatches(const Chirotope& chi, const LineMatroid& m);

// Determinant signs of the homogeneous line coordinates, in line order.
// Errors: "degenerate arrangement".
Chirotope ChirotopeOfArrangement(const Arrangement& arrangement);

struct RealizationCheck {
  bool exact = false;
  // First triple whose concurrency disagrees with dependence, if any.
  std::optional<std::array<std::string, 3>> mismatch;
};

// The arrangement realizes `m` iff the names agree and three lines are
// concurrent exactly when the triple is dependent.
RealizationCheck CheckRealization(const Arrangement& arrangement, const LineMatroid& m);

}  // namespace minorient

#endif  // MINORIENT_CHIROTOPE_H_
