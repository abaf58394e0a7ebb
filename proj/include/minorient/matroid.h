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

// Simple rank-3 matroids given by their nontrivial lines.
//
// Only rank-2 flats with at least three elements are stored; every other
// pair of elements spans an implicit two-point line. A triple is dependent
// iff some stored flat contains it.

#ifndef MINORIENT_MATROID_H_
#define MINORIENT_MATROID_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minorient/projplane.h"

namespace minorient {

struct ValidationResult {
  bool ok = true;
  std::string diagnostic;
};

class LineMatroid {
 public:
  LineMatroid(std::vector<std::string> elements,
              std::vector<std::vector<std::string>> flats);

  // Constructs and validates; throws Error carrying the diagnostic.
  static LineMatroid Checked(std::vector<std::string> elements,
                             std::vector<std::vector<std::string>> flats);

  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<std::string>>& flats() const { return flats_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name(int i) const { return elements_[i]; }
  std::optional<int> IndexOf(std::string_view name) const;
  // Flats as sorted element indices; names unknown to the ground set are
  // dropped, so this is only faithful for valid matroids.
  const std::vector<std::vector<int>>& flat_indices() const { return flat_idx_; }

  ValidationResult Validate() const;

  // Indices must be distinct and in range; any order.
  bool Dependent(int i, int j, int k) const;
  // Errors: "bad triple".
  bool Dependent(const std::array<std::string, 3>& triple) const;

  int MaxFlatSize() const;

  // Same ground set and same set of flats, ignoring order.
  bool SameStructure(const LineMatroid& other) const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::string>> flats_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> flat_idx_;
  std::vector<bool> dependent_;  // by TripleRank
  std::string structural_error_;
};

// Errors: "no such element".
LineMatroid DeleteElement(const LineMatroid& m, std::string_view element);
// Errors: "restriction below rank", "no such element".
LineMatroid Restrict(const LineMatroid& m, const std::vector<std::string>& subset);
// Relabels through `renaming`; names absent from the map keep their name.
LineMatroid Rename(const LineMatroid& m,
                   const std::map<std::string, std::string>& renaming);

using ElementMap = std::map<std::string, ProjPoint>;

struct EmbeddingCheck {
  bool ok = false;
  std::string diagnostic;
  std::optional<std::array<std::string, 3>> violation;
  int64_t triples_scanned = 0;
};

// True iff `image` is injective and collinearity of image triples coincides
// with dependence in `m` for every 3-subset.
EmbeddingCheck IsEmbedding(const LineMatroid& m, const ElementMap& image,
                           const FieldSpec& spec);

// Orders names so that embedded integers compare numerically ("a_2" < "a_10").
bool NaturalLess(std::string_view a, std::string_view b);

}  // namespace minorient

#endif  // MINORIENT_MATROID_H_
