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

// Colexicographic ranking of 3-subsets {i < j < k} of {0..n-1}.

#ifndef MINORIENT_TRIPLES_H_
#define MINORIENT_TRIPLES_H_

#include <array>
#include <cstdint>
#include <utility>

namespace minorient {

constexpr int64_t Choose2(int64_t n) { return n * (n - 1) / 2; }
constexpr int64_t Choose3(int64_t n) { return n * (n - 1) * (n - 2) / 6; }

// Requires i < j < k.
constexpr int64_t TripleRank(int i, int j, int k) {
  return Choose3(k) + Choose2(j) + i;
}

// Sorts (i, j, k) in place and returns the sign of the sorting permutation.
// The entries must be distinct.
constexpr int SortTriple(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) std::swap(i, j), sign = -sign;
  if (j > k) std::swap(j, k), sign = -sign;
  if (i > j) std::swap(i, j), sign = -sign;
  return sign;
}

inline std::array<int, 3> TripleUnrank(int64_t rank) {
  int k = 2;
  while (Choose3(k + 1) <= rank) ++k;
  rank -= Choose3(k);
  int j = 1;
  while (Choose2(j + 1) <= rank) ++j;
  rank -= Choose2(j);
  return {static_cast<int>(rank), j, k};
}

}  // namespace minorient

#endif  // MINORIENT_TRIPLES_H_
